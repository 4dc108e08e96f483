#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "sslab/instance.hpp"
#include "sslab/numtheory.hpp"
#include "sslab/rng.hpp"
#include "sslab/streams.hpp"

namespace sslab {

struct ProtocolParams {
    double cutoff_c = 8.0;  // filtered-list budget: c * N * log2(max(N,2))^3
};

// The honest proof for a known witness: the residue of its first-half sum.
uint64_t honest_proof(const KSumInstance& inst, const std::array<uint32_t, 4>& witness,
                      uint64_t p);

struct VerifierOutcome {
    bool accepted = false;
    bool cutoff_hit = false;
    std::optional<std::array<uint32_t, 4>> witness;  // indices into the original arrays
    uint64_t a12_size = 0;
    uint64_t a34_size = 0;
    uint64_t work = 0;  // entries touched: dedup + filtered lists + scan steps
};

// Residue-filtered 4-SUM check: keeps only pairs from A1 x A2 whose sum is
// r mod p (and t - r mod p on the other side), then runs an exact 2-SUM over
// the two filtered lists. Rejects outright when either list would exceed the
// cutoff, so a dishonest prover can never make it accept a no-instance.
VerifierOutcome run_verifier(const KSumInstance& inst, uint64_t p, uint64_t r,
                             const ProtocolParams& params = {});

struct SimulationReport {
    uint64_t trials = 0;
    uint64_t accepts = 0;
    double accept_rate = 0;
    double mean_a12 = 0;
    uint64_t max_a12 = 0;
    uint64_t max_work = 0;
};

// Repeats the (prime, proof, verify) round. With a witness the proof is
// honest; otherwise the proof is a uniform residue, standing in for the best
// a prover could try against a no-instance.
SimulationReport simulate_protocol(const KSumInstance& inst,
                                   const std::optional<std::array<uint32_t, 4>>& witness,
                                   uint64_t trials, const ProtocolParams& params,
                                   RandomSource& rng);

struct EnumerationParams {
    ProtocolParams protocol;
    uint32_t rounds = 3;  // fresh prime per round; the last round lifts the cutoff
};

struct EnumerationStats {
    uint64_t residues_tried = 0;
    uint64_t verifier_work = 0;
    uint64_t max_a12 = 0;
};

// Deterministic-answer solver built on the verifier: reduce Subset Sum to
// 4-SUM and try every residue for a handful of primes. The final round runs
// uncapped, so a "no" is exact.
std::optional<SolutionCertificate> solve_by_proof_enumeration(const SubsetSumInstance& inst,
                                                              const EnumerationParams& params,
                                                              RandomSource& rng,
                                                              EnumerationStats* stats = nullptr);

}  // namespace sslab
