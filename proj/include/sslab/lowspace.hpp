#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sslab/instance.hpp"
#include "sslab/int128.hpp"
#include "sslab/mixer.hpp"
#include "sslab/params.hpp"
#include "sslab/rng.hpp"
#include "sslab/wov.hpp"

namespace sslab {

// One candidate building block: a partial subset with its weight, the item
// mask it occupies, and the slice of the middle mixer it claims.
struct TupleEntry {
    i128 weight = 0;
    uint64_t items = 0;
    uint64_t mixer_mask = 0;
};

struct QFamily {
    std::vector<TupleEntry> entries;
    size_t size() const { return entries.size(); }
};

using SideFamilies = std::array<QFamily, 4>;

// One subset per distinct subset sum of the given items.
std::vector<TupleEntry> distinct_sum_representatives(const SubsetSumInstance& inst,
                                                     const std::vector<uint32_t>& items,
                                                     const MixerLimits& limits = {});

struct FamilyBuildRequest {
    const SubsetSumInstance* inst = nullptr;
    std::array<std::vector<uint32_t>, 4> parts;         // layer item indices
    const std::vector<TupleEntry>* edge_reps = nullptr; // representatives of the edge mixer
    const std::vector<uint32_t>* middle = nullptr;      // middle mixer item indices
    std::array<uint32_t, 4> layer_targets{};            // per-layer pick counts
    uint32_t mixer_take = 0;                            // middle items claimed by the 4th family
    int slack = 1;                                      // widens every size window by +-slack
    uint64_t family_cap = uint64_t(1) << 20;
};

// Families 1..4: [edge reps x layer1], [layer2], [layer3],
// [layer4 x middle picks]. nullopt when a family would blow the cap.
std::optional<SideFamilies> build_side_q_families(const FamilyBuildRequest& req);

struct RingStats {
    uint64_t stream_pops = 0;
    uint64_t peak_frontier = 0;
};

// Up to max_out tuples (one entry per family) whose total weight is r mod p
// and s mod q: weights are folded into [0, pq) and the four exact targets
// v, v+pq, v+2pq, v+3pq are swept with opposing sum streams.
std::vector<std::array<uint32_t, 4>> shamir_for_rings(const std::array<const QFamily*, 4>& fams,
                                                      uint64_t p, uint64_t q, uint64_t r,
                                                      uint64_t s, uint64_t max_out,
                                                      RingStats* stats = nullptr);

struct ExactMatch {
    i128 weight = 0;
    uint64_t mixer_mask = 0;
    uint64_t items = 0;
    std::array<uint32_t, 4> picks{};
};

// All tuples with total weight exactly a, one representative per distinct
// middle-mixer mask (first hit wins).
std::vector<ExactMatch> faster_shamir(const std::array<const QFamily*, 4>& fams, i128 a,
                                      RingStats* stats = nullptr);

struct SideBudget {
    uint64_t p = 2, q = 3;
    uint64_t r = 0, s = 0;  // residue targets mod p / mod q
    uint64_t ell = 0;       // majority threshold: sample 2*ell+1 tuples
};

struct SideFamilyResult {
    bool skipped = false;     // oversized sample without a strict-majority weight
    bool exhaustive = false;  // the sample provably covered every candidate tuple
    i128 majority_weight = 0;
    WeightedSetFamily family;  // mask: middle-mixer slice; payload: item mask
    uint64_t tuples_sampled = 0;
    RingStats ring;
};

SideFamilyResult build_side_family(const std::array<const QFamily*, 4>& fams,
                                   const SideBudget& budget, uint32_t universe);

struct RepetitionBudget {
    uint64_t reps = 1;
    bool capped = false;
};

// ceil(2^(lambda n)) * poly repetitions, clamped to max_reps.
// poly_factor == 0 selects the default polynomial factor n^2.
RepetitionBudget repetition_budget(uint32_t n, double lambda, uint64_t max_reps,
                                   uint64_t poly_factor);

struct LowspaceConfig {
    double alpha_min = 0.0;
    double alpha_max = 1.0;
    uint64_t max_reps = 64;
    uint64_t poly_factor = 0;
    int slack = 1;
    double q_poly = 1.0;         // scales the second modulus range
    uint64_t s_cap = 4096;       // hard ceiling on the second modulus (full s sweep)
    uint64_t family_cap = uint64_t(1) << 20;
    MixerLimits mixer_limits{};
};

struct LowspaceStats {
    uint64_t reps_used = 0;
    uint64_t s_iterations = 0;
    uint64_t wov_calls = 0;
    uint64_t family_builds = 0;
    uint64_t majority_skips = 0;
    uint64_t cap_skips = 0;
    uint64_t mu_over_quarter = 0;
    uint64_t peak_entries = 0;
    uint64_t stream_pops = 0;
    bool budget_capped = false;
    bool modulus_clamped = false;
    bool ran_delegate = false;
    bool exhausted = false;
    std::string found_by;  // "trivial", "delegate" or "mixer"
    double alpha_found = -1.0;
};

// Low-space Subset Sum: sweeps the solution density, delegates densities with
// an empty mixer schedule to schroeppel_shamir, and runs the randomized
// mixer/representative pipeline on the hard band. A returned certificate is
// always re-verified against the instance; absence of one is exact whenever
// the delegate covered the sweep, otherwise stats.exhausted is set.
std::optional<SolutionCertificate> solve_lowspace(const SubsetSumInstance& inst,
                                                  const LowspaceConfig& cfg, uint64_t seed,
                                                  LowspaceStats* stats = nullptr);

}  // namespace sslab
