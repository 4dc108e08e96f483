#include "sslab/am.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace sslab {

namespace {

uint64_t mod_residue(i128 v, uint64_t p) {
    i128 m = v % i128(p);
    if (m < 0) m += i128(p);
    return uint64_t(m);
}

struct DedupArray {
    std::vector<i128> values;         // ascending, distinct
    std::vector<uint32_t> original;   // lowest original index per value
};

DedupArray dedup_sorted(const std::vector<i128>& arr, size_t real_size) {
    std::vector<std::pair<i128, uint32_t>> tmp;
    tmp.reserve(real_size);
    for (uint32_t i = 0; i < real_size; ++i) tmp.emplace_back(arr[i], i);
    std::sort(tmp.begin(), tmp.end());
    DedupArray out;
    for (auto& [v, idx] : tmp) {
        if (!out.values.empty() && out.values.back() == v) continue;
        out.values.push_back(v);
        out.original.push_back(idx);
    }
    return out;
}

struct FilteredList {
    std::vector<i128> sums;  // ascending
    std::vector<std::pair<uint32_t, uint32_t>> picks;
    bool over_budget = false;
};

// All pairs from x,y whose sum is rho mod p, grouped by residue classes.
FilteredList build_filtered(const DedupArray& x, const DedupArray& y, uint64_t p, uint64_t rho,
                            uint64_t budget, uint64_t* work) {
    FilteredList out;
    std::unordered_map<uint64_t, std::vector<uint32_t>> y_groups;
    y_groups.reserve(y.values.size() * 2);
    for (uint32_t j = 0; j < y.values.size(); ++j)
        y_groups[mod_residue(y.values[j], p)].push_back(j);
    *work += y.values.size();
    // Count first so an oversized list rejects without materializing.
    uint64_t count = 0;
    for (uint32_t i = 0; i < x.values.size(); ++i) {
        uint64_t need = (rho + p - mod_residue(x.values[i], p)) % p;
        auto it = y_groups.find(need);
        if (it != y_groups.end()) count += it->second.size();
    }
    *work += x.values.size();
    if (count > budget) {
        out.over_budget = true;
        return out;
    }
    out.sums.reserve(count);
    out.picks.reserve(count);
    for (uint32_t i = 0; i < x.values.size(); ++i) {
        uint64_t need = (rho + p - mod_residue(x.values[i], p)) % p;
        auto it = y_groups.find(need);
        if (it == y_groups.end()) continue;
        for (uint32_t j : it->second) {
            out.sums.push_back(x.values[i] + y.values[j]);
            out.picks.emplace_back(i, j);
        }
    }
    // Sort by sum for the exact 2-SUM pass, ties by pick order.
    std::vector<uint32_t> ord(out.sums.size());
    for (uint32_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](uint32_t a, uint32_t b) {
        if (out.sums[a] != out.sums[b]) return out.sums[a] < out.sums[b];
        return out.picks[a] < out.picks[b];
    });
    FilteredList sorted;
    sorted.sums.reserve(out.sums.size());
    sorted.picks.reserve(out.picks.size());
    for (uint32_t i : ord) {
        sorted.sums.push_back(out.sums[i]);
        sorted.picks.push_back(out.picks[i]);
    }
    *work += 2 * sorted.sums.size();
    return sorted;
}

}  // namespace

uint64_t honest_proof(const KSumInstance& inst, const std::array<uint32_t, 4>& witness,
                      uint64_t p) {
    return mod_residue(inst.arrays[0].at(witness[0]) + inst.arrays[1].at(witness[1]), p);
}

VerifierOutcome run_verifier(const KSumInstance& inst, uint64_t p, uint64_t r,
                             const ProtocolParams& params) {
    inst.validate();
    if (inst.arity() != 4) throw std::invalid_argument("run_verifier: arity must be 4");
    if (p < 2) throw std::invalid_argument("run_verifier: modulus must be at least 2");
    VerifierOutcome out;
    size_t n_max = 0;
    for (size_t s : inst.real_sizes) n_max = std::max(n_max, s);
    double lg = std::log2(double(std::max<size_t>(n_max, 2)));
    // Negative c lifts the cutoff entirely (exact mode); c == 0 rejects any
    // nonempty filtered list.
    uint64_t budget = params.cutoff_c < 0
                          ? UINT64_MAX
                          : uint64_t(std::llround(params.cutoff_c * double(n_max) * lg * lg * lg));

    std::array<DedupArray, 4> d;
    for (size_t j = 0; j < 4; ++j) {
        d[j] = dedup_sorted(inst.arrays[j], inst.real_sizes[j]);
        out.work += d[j].values.size();
    }
    uint64_t rho12 = r % p;
    uint64_t rho34 = (mod_residue(inst.target, p) + p - rho12) % p;
    FilteredList a12 = build_filtered(d[0], d[1], p, rho12, budget, &out.work);
    if (a12.over_budget) {
        out.cutoff_hit = true;
        return out;
    }
    FilteredList a34 = build_filtered(d[2], d[3], p, rho34, budget, &out.work);
    if (a34.over_budget) {
        out.cutoff_hit = true;
        return out;
    }
    out.a12_size = a12.sums.size();
    out.a34_size = a34.sums.size();
    auto hit = two_sum(a12.sums, a34.sums, inst.target);
    out.work += a12.sums.size() + a34.sums.size();
    if (hit) {
        auto [i12, i34] = *hit;
        out.accepted = true;
        out.witness = std::array<uint32_t, 4>{
            d[0].original[a12.picks[i12].first], d[1].original[a12.picks[i12].second],
            d[2].original[a34.picks[i34].first], d[3].original[a34.picks[i34].second]};
    }
    return out;
}

SimulationReport simulate_protocol(const KSumInstance& inst,
                                   const std::optional<std::array<uint32_t, 4>>& witness,
                                   uint64_t trials, const ProtocolParams& params,
                                   RandomSource& rng) {
    SimulationReport rep;
    rep.trials = trials;
    size_t n_max = 0;
    for (size_t s : inst.real_sizes) n_max = std::max(n_max, s);
    uint64_t hi = std::max<uint64_t>(n_max, 2);
    uint64_t a12_total = 0;
    for (uint64_t trial = 0; trial < trials; ++trial) {
        auto ps = uniform_prime_in(2, hi, rng);
        if (!ps) throw std::runtime_error("simulate_protocol: no prime available");
        uint64_t p = uint64_t(ps->value);
        uint64_t r = witness ? honest_proof(inst, *witness, p) : rng.below(p);
        VerifierOutcome v = run_verifier(inst, p, r, params);
        if (v.accepted) ++rep.accepts;
        a12_total += v.a12_size;
        rep.max_a12 = std::max(rep.max_a12, v.a12_size);
        rep.max_work = std::max(rep.max_work, v.work);
    }
    rep.accept_rate = trials ? double(rep.accepts) / double(trials) : 0.0;
    rep.mean_a12 = trials ? double(a12_total) / double(trials) : 0.0;
    return rep;
}

std::optional<SolutionCertificate> solve_by_proof_enumeration(const SubsetSumInstance& inst,
                                                              const EnumerationParams& params,
                                                              RandomSource& rng,
                                                              EnumerationStats* stats) {
    if (inst.target == 0) return SolutionCertificate{};
    Reduced4Sum red = reduce_subsetsum_to_4sum(inst);
    size_t n_max = 0;
    for (size_t s : red.ksum.real_sizes) n_max = std::max(n_max, s);
    uint64_t hi = std::max<uint64_t>(n_max, 2);
    uint32_t rounds = std::max<uint32_t>(params.rounds, 1);
    for (uint32_t round = 0; round < rounds; ++round) {
        auto ps = uniform_prime_in(2, hi, rng);
        if (!ps) throw std::runtime_error("solve_by_proof_enumeration: no prime available");
        uint64_t p = uint64_t(ps->value);
        ProtocolParams pp = params.protocol;
        if (round + 1 == rounds) pp.cutoff_c = -1.0;  // exact final sweep
        for (uint64_t r = 0; r < p; ++r) {
            VerifierOutcome v = run_verifier(red.ksum, p, r, pp);
            if (stats) {
                ++stats->residues_tried;
                stats->verifier_work += v.work;
                stats->max_a12 = std::max(stats->max_a12, v.a12_size);
            }
            if (v.accepted) return certificate_from_masks(red, *v.witness);
        }
    }
    return std::nullopt;
}

}  // namespace sslab
