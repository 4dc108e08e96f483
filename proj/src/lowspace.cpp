#include "sslab/lowspace.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "sslab/numtheory.hpp"
#include "sslab/streams.hpp"

namespace sslab {

namespace {

struct I128Hash {
    size_t operator()(i128 v) const {
        u128 x = u128(v);
        uint64_t h = uint64_t(x) ^ (uint64_t(x >> 64) * 0x9e3779b97f4a7c15ULL);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return size_t(h);
    }
};

uint64_t binom_saturating(uint64_t n, uint64_t k, uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 acc = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return cap;
    }
    return uint64_t(acc);
}

// Lexicographic k-combinations of [0, n).
template <typename F>
void for_each_combination(uint32_t n, uint32_t k, F&& fn) {
    if (k > n) return;
    std::vector<uint32_t> idx(k);
    for (uint32_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        uint32_t i = k;
        while (i > 0 && idx[i - 1] + (k - i + 1) >= n) --i;
        if (i == 0) return;  // includes k == 0: the empty pick was already emitted
        ++idx[i - 1];
        for (uint32_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<TupleEntry> distinct_sum_representatives(const SubsetSumInstance& inst,
                                                     const std::vector<uint32_t>& items,
                                                     const MixerLimits& limits) {
    if (items.size() > limits.enumeration_cap)
        throw std::invalid_argument("distinct_sum_representatives: set too large");
    std::unordered_map<i128, uint64_t, I128Hash> seen;
    seen.reserve(size_t(2) << items.size());
    const uint64_t count = uint64_t(1) << items.size();
    for (uint64_t mask = 0; mask < count; ++mask) {
        i128 s = 0;
        uint64_t im = 0;
        for (size_t i = 0; i < items.size(); ++i) {
            if (mask >> i & 1) {
                s += inst.items[items[i]];
                im |= uint64_t(1) << items[i];
            }
        }
        seen.emplace(s, im);  // first subset per sum wins (mask order)
    }
    std::vector<TupleEntry> out;
    out.reserve(seen.size());
    for (auto& [w, im] : seen) out.push_back({w, im, 0});
    std::sort(out.begin(), out.end(),
              [](const TupleEntry& a, const TupleEntry& b) { return a.weight < b.weight; });
    return out;
}

namespace {

// All subsets of `pool` with size inside [target-slack, target+slack].
std::vector<TupleEntry> layer_entries(const SubsetSumInstance& inst,
                                      const std::vector<uint32_t>& pool, uint32_t target,
                                      int slack, bool mixer_positions, uint64_t cap,
                                      bool& over_cap) {
    std::vector<TupleEntry> out;
    uint32_t lo = uint32_t(std::max<int64_t>(0, int64_t(target) - slack));
    uint32_t hi = uint32_t(std::min<int64_t>(int64_t(pool.size()), int64_t(target) + slack));
    uint64_t expected = 0;
    for (uint32_t k = lo; k <= hi; ++k)
        expected += binom_saturating(pool.size(), k, cap + 1);
    if (expected > cap) {
        over_cap = true;
        return out;
    }
    out.reserve(expected);
    for (uint32_t k = lo; k <= hi; ++k) {
        for_each_combination(uint32_t(pool.size()), k, [&](const std::vector<uint32_t>& picks) {
            TupleEntry e;
            for (uint32_t pos : picks) {
                e.weight += inst.items[pool[pos]];
                e.items |= uint64_t(1) << pool[pos];
                if (mixer_positions) e.mixer_mask |= uint64_t(1) << pos;
            }
            out.push_back(e);
        });
    }
    return out;
}

std::vector<TupleEntry> cross_entries(const std::vector<TupleEntry>& a,
                                      const std::vector<TupleEntry>& b, uint64_t cap,
                                      bool& over_cap) {
    if (uint64_t(a.size()) * b.size() > cap) {
        over_cap = true;
        return {};
    }
    std::vector<TupleEntry> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back({x.weight + y.weight, x.items | y.items, x.mixer_mask | y.mixer_mask});
    return out;
}

}  // namespace

std::optional<SideFamilies> build_side_q_families(const FamilyBuildRequest& req) {
    bool over = false;
    SideFamilies fams;
    std::array<std::vector<TupleEntry>, 4> layers;
    for (size_t i = 0; i < 4; ++i) {
        layers[i] = layer_entries(*req.inst, req.parts[i], req.layer_targets[i], req.slack, false,
                                  req.family_cap, over);
        if (over) return std::nullopt;
    }
    std::vector<TupleEntry> middle_picks = layer_entries(
        *req.inst, *req.middle, req.mixer_take, req.slack, true, req.family_cap, over);
    if (over) return std::nullopt;
    fams[0].entries = cross_entries(*req.edge_reps, layers[0], req.family_cap, over);
    if (over) return std::nullopt;
    fams[1].entries = std::move(layers[1]);
    fams[2].entries = std::move(layers[2]);
    fams[3].entries = cross_entries(layers[3], middle_picks, req.family_cap, over);
    if (over) return std::nullopt;
    return fams;
}

std::vector<std::array<uint32_t, 4>> shamir_for_rings(const std::array<const QFamily*, 4>& fams,
                                                      uint64_t p, uint64_t q, uint64_t r,
                                                      uint64_t s, uint64_t max_out,
                                                      RingStats* stats) {
    if (gcd_u128(p, q) != 1)
        throw std::invalid_argument("shamir_for_rings: moduli must be coprime");
    std::vector<std::array<uint32_t, 4>> out;
    if (max_out == 0) return out;
    const i128 pq = i128(p) * i128(q);
    const i128 v = i128(crt_combine(r % p, p, s % q, q));
    auto normalize = [&](const QFamily& f) {
        std::vector<i128> vals;
        vals.reserve(f.entries.size());
        for (const auto& e : f.entries) {
            i128 m = e.weight % pq;
            if (m < 0) m += pq;
            vals.push_back(m);
        }
        return vals;
    };
    std::array<std::vector<i128>, 4> norm;
    for (size_t i = 0; i < 4; ++i) norm[i] = normalize(*fams[i]);

    std::vector<SumPair> run1, run2;
    auto next_run = [&](SortedSumStream& st, std::vector<SumPair>& run) {
        run.clear();
        auto first = st.pop();
        if (!first) return false;
        run.push_back(*first);
        while (const SumPair* nx = st.peek()) {
            if (nx->sum != first->sum) break;
            run.push_back(*st.pop());
        }
        return true;
    };
    for (int j = 0; j < 4; ++j) {
        i128 tau = v + i128(j) * pq;
        SortedSumStream d1(norm[0], norm[1], StreamOrder::increasing);
        SortedSumStream d2(norm[2], norm[3], StreamOrder::decreasing);
        bool h1 = next_run(d1, run1), h2 = next_run(d2, run2);
        while (h1 && h2) {
            i128 total = run1.front().sum + run2.front().sum;
            if (total == tau) {
                for (const auto& e1 : run1) {
                    for (const auto& e2 : run2) {
                        out.push_back({e1.left, e1.right, e2.left, e2.right});
                        if (out.size() >= max_out) {
                            if (stats) {
                                stats->stream_pops += d1.emitted() + d2.emitted();
                                stats->peak_frontier = std::max<uint64_t>(
                                    stats->peak_frontier,
                                    d1.peak_frontier() + d2.peak_frontier());
                            }
                            return out;
                        }
                    }
                }
                h1 = next_run(d1, run1);
                h2 = next_run(d2, run2);
            } else if (total < tau) {
                h1 = next_run(d1, run1);
            } else {
                h2 = next_run(d2, run2);
            }
        }
        if (stats) {
            stats->stream_pops += d1.emitted() + d2.emitted();
            stats->peak_frontier = std::max<uint64_t>(
                stats->peak_frontier, d1.peak_frontier() + d2.peak_frontier());
        }
    }
    return out;
}

std::vector<ExactMatch> faster_shamir(const std::array<const QFamily*, 4>& fams, i128 a,
                                      RingStats* stats) {
    std::vector<i128> w1, w2, w3, w4;
    for (const auto& e : fams[0]->entries) w1.push_back(e.weight);
    for (const auto& e : fams[1]->entries) w2.push_back(e.weight);
    for (const auto& e : fams[2]->entries) w3.push_back(e.weight);
    for (const auto& e : fams[3]->entries) w4.push_back(e.weight);
    SortedSumStream d1(w1, w2, StreamOrder::increasing);
    SortedSumStream d2(w3, w4, StreamOrder::decreasing);
    std::vector<ExactMatch> out;
    std::unordered_set<uint64_t> used;
    while (auto e2 = d2.pop()) {
        uint64_t mask = fams[3]->entries[e2->right].mixer_mask;
        if (used.count(mask)) continue;
        // The required first-half weight grows as the second half shrinks,
        // so the first stream only ever moves forward.
        const SumPair* e1 = d1.peek();
        while (e1 && e1->sum + e2->sum < a) {
            d1.pop();
            e1 = d1.peek();
        }
        if (!e1) break;
        if (e1->sum + e2->sum == a) {
            ExactMatch m;
            m.weight = a;
            m.mixer_mask = mask;
            m.items = fams[0]->entries[e1->left].items | fams[1]->entries[e1->right].items |
                      fams[2]->entries[e2->left].items | fams[3]->entries[e2->right].items;
            m.picks = {e1->left, e1->right, e2->left, e2->right};
            out.push_back(m);
            used.insert(mask);
        }
    }
    if (stats) {
        stats->stream_pops += d1.emitted() + d2.emitted();
        stats->peak_frontier =
            std::max<uint64_t>(stats->peak_frontier, d1.peak_frontier() + d2.peak_frontier());
    }
    return out;
}

SideFamilyResult build_side_family(const std::array<const QFamily*, 4>& fams,
                                   const SideBudget& budget, uint32_t universe) {
    SideFamilyResult res;
    res.family.universe = universe;
    uint64_t want = budget.ell >= (UINT64_MAX - 1) / 2 ? UINT64_MAX : 2 * budget.ell + 1;
    auto sample = shamir_for_rings(fams, budget.p, budget.q, budget.r, budget.s, want, &res.ring);
    res.tuples_sampled = sample.size();
    auto weight_of = [&](const std::array<uint32_t, 4>& picks) {
        return fams[0]->entries[picks[0]].weight + fams[1]->entries[picks[1]].weight +
               fams[2]->entries[picks[2]].weight + fams[3]->entries[picks[3]].weight;
    };
#ifndef NDEBUG
    for (const auto& picks : sample) {
        i128 w = weight_of(picks);
        assert(u128((w % i128(budget.p) + i128(budget.p)) % i128(budget.p)) ==
               budget.r % budget.p);
        assert(u128((w % i128(budget.q) + i128(budget.q)) % i128(budget.q)) ==
               budget.s % budget.q);
    }
#endif
    if (sample.size() < want || want == UINT64_MAX) {
        // Whole candidate set in hand: keep one entry per (weight, mask).
        res.exhaustive = true;
        std::map<std::pair<i128, uint64_t>, uint64_t> dedup;
        for (const auto& picks : sample) {
            i128 w = weight_of(picks);
            uint64_t mask = fams[3]->entries[picks[3]].mixer_mask;
            uint64_t items = fams[0]->entries[picks[0]].items | fams[1]->entries[picks[1]].items |
                             fams[2]->entries[picks[2]].items | fams[3]->entries[picks[3]].items;
            dedup.emplace(std::make_pair(w, mask), items);
        }
        for (auto& [key, items] : dedup)
            res.family.entries.push_back({key.second, key.first, items});
        return res;
    }
    // Oversized: trust the sample only if one weight holds a strict majority.
    std::unordered_map<i128, uint64_t, I128Hash> counts;
    counts.reserve(sample.size() * 2);
    i128 best_w = 0;
    uint64_t best_c = 0;
    for (const auto& picks : sample) {
        i128 w = weight_of(picks);
        uint64_t c = ++counts[w];
        if (c > best_c) {
            best_c = c;
            best_w = w;
        }
    }
    if (best_c < budget.ell + 1) {
        res.skipped = true;
        return res;
    }
    res.majority_weight = best_w;
    auto matches = faster_shamir(fams, best_w, &res.ring);
    res.family.entries.reserve(matches.size());
    for (const auto& m : matches)
        res.family.entries.push_back({m.mixer_mask, m.weight, m.items});
    return res;
}

RepetitionBudget repetition_budget(uint32_t n, double lambda, uint64_t max_reps,
                                   uint64_t poly_factor) {
    RepetitionBudget out;
    uint64_t poly = poly_factor ? poly_factor : std::max<uint64_t>(1, uint64_t(n) * n);
    double raw = std::ceil(std::exp2(lambda * double(n)));
    double want = raw * double(poly);
    if (want > double(max_reps)) {
        out.reps = max_reps;
        out.capped = true;
    } else {
        out.reps = std::max<uint64_t>(1, uint64_t(want));
    }
    return out;
}

namespace {

struct MixerIterationContext {
    const SubsetSumInstance* work = nullptr;
    const SubsetSumInstance* original = nullptr;
    bool complement_pass = false;
    double alpha = 0;
    double beta = 0;
    uint32_t m = 0;
};

uint64_t family_total(const SideFamilies& f) {
    return f[0].size() + f[1].size() + f[2].size() + f[3].size();
}

std::optional<SolutionCertificate> certificate_from_payloads(const MixerIterationContext& ctx,
                                                             uint64_t left_items,
                                                             uint64_t right_items) {
    if ((left_items & right_items) != 0) return std::nullopt;
    uint64_t items = left_items | right_items;
    const size_t n = ctx.work->n();
    if (ctx.complement_pass) items = ~items & (n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1);
    SolutionCertificate cert;
    for (uint32_t i = 0; i < n; ++i)
        if (items >> i & 1) cert.indices.push_back(i);
    if (!verify_certificate(*ctx.original, cert)) return std::nullopt;
    return cert;
}

}  // namespace

std::optional<SolutionCertificate> solve_lowspace(const SubsetSumInstance& inst,
                                                  const LowspaceConfig& cfg, uint64_t seed,
                                                  LowspaceStats* stats_out) {
    LowspaceStats local;
    LowspaceStats& st = stats_out ? *stats_out : local;
    st = LowspaceStats{};
    if (inst.n() > 64) throw std::invalid_argument("solve_lowspace: more than 64 items");
    if (inst.target == 0) {
        st.found_by = "trivial";
        return SolutionCertificate{};
    }
    RandomSource rng(seed);
    const uint32_t n = uint32_t(inst.n());

    std::vector<uint32_t> mixer_ks;
    bool delegate_needed = n == 0;
    for (uint32_t k = 0; k <= n; ++k) {
        double alpha = n ? double(k) / double(n) : 0.0;
        if (alpha < cfg.alpha_min - 1e-12 || alpha > cfg.alpha_max + 1e-12) continue;
        double beta = beta_schedule(alpha);
        uint32_t m = uint32_t(std::floor(beta * n + 1e-9));
        if (beta == 0.0 || m == 0 || 3ull * m > n)
            delegate_needed = true;
        else
            mixer_ks.push_back(k);
    }

    if (delegate_needed) {
        st.ran_delegate = true;
        SolveStats ss;
        auto cert = schroeppel_shamir(inst, &ss);
        st.peak_entries = std::max(st.peak_entries, ss.peak_entries);
        st.stream_pops += ss.stream_pops;
        if (cert) {
            st.found_by = "delegate";
            return cert;
        }
    }

    i128 total_weight = 0;
    for (i128 w : inst.items) total_weight += w;
    SubsetSumInstance complement{inst.items, total_weight - inst.target};

    for (uint32_t k : mixer_ks) {
        const double alpha = double(k) / double(n);
        const double beta = beta_schedule(alpha);
        const uint32_t m = uint32_t(std::floor(beta * n + 1e-9));
        const double lam = lambda_exponent(alpha, beta);
        RepetitionBudget budget = repetition_budget(n, lam, cfg.max_reps, cfg.poly_factor);
        st.budget_capped = st.budget_capped || budget.capped;

        for (int pass = 0; pass < 2; ++pass) {
            MixerIterationContext ctx;
            ctx.original = &inst;
            ctx.work = pass ? &complement : &inst;
            ctx.complement_pass = pass != 0;
            ctx.alpha = alpha;
            ctx.beta = beta;
            ctx.m = m;
            const SubsetSumInstance& work = *ctx.work;

            for (uint64_t rep = 0; rep < budget.reps; ++rep) {
                ++st.reps_used;
                MixerSample mix = sample_mixers(work, beta, rng, cfg.mixer_limits);
                auto reps_left = distinct_sum_representatives(work, mix.left, cfg.mixer_limits);
                auto reps_right = distinct_sum_representatives(work, mix.right, cfg.mixer_limits);

                std::vector<uint32_t> rest;
                rest.reserve(n - 3 * m);
                {
                    std::vector<bool> in_mixer(n, false);
                    for (uint32_t i : mix.left) in_mixer[i] = true;
                    for (uint32_t i : mix.middle) in_mixer[i] = true;
                    for (uint32_t i : mix.right) in_mixer[i] = true;
                    for (uint32_t i = 0; i < n; ++i)
                        if (!in_mixer[i]) rest.push_back(i);
                }

                for (uint32_t mu_c = 0; mu_c <= m / 2; ++mu_c) {
                    const double mu = double(mu_c) / double(m);
                    if (mu > 0.25) ++st.mu_over_quarter;
                    ParameterPoint pt = make_point(alpha, beta, mu, mix.eps_middle);
                    PartitionPlan plan;
                    try {
                        plan = partition_plan(n, pt);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    rng.shuffle(rest);
                    std::array<std::vector<uint32_t>, 4> left_parts, right_parts;
                    size_t cursor = 0;
                    for (size_t i = 0; i < 4; ++i) {
                        for (uint32_t c = 0; c < plan.left_parts[i]; ++c)
                            left_parts[i].push_back(rest[cursor++]);
                    }
                    for (size_t i = 0; i < 4; ++i) {
                        for (uint32_t c = 0; c < plan.right_parts[i]; ++c)
                            right_parts[i].push_back(rest[cursor++]);
                    }
                    for (auto& prt : left_parts) std::sort(prt.begin(), prt.end());
                    for (auto& prt : right_parts) std::sort(prt.begin(), prt.end());

                    auto layer_targets = [&](const std::array<uint32_t, 4>& sizes,
                                             uint32_t side_total) {
                        std::vector<double> raw(4);
                        for (size_t i = 0; i < 4; ++i) raw[i] = double(sizes[i]);
                        uint32_t want = uint32_t(std::llround(pt.gamma * side_total));
                        auto got = apportion(raw, std::min(want, side_total));
                        std::array<uint32_t, 4> out{};
                        for (size_t i = 0; i < 4; ++i) out[i] = std::min(got[i], sizes[i]);
                        return out;
                    };
                    auto kl = layer_targets(plan.left_parts, plan.left_total);
                    auto kr = layer_targets(plan.right_parts, plan.right_total);

                    uint32_t take_left = mu_c;
                    uint32_t take_right = uint32_t(std::max<int64_t>(
                        0, std::llround(0.5 * double(m)) - int64_t(mu_c)));
                    take_right = std::min(take_right, m);

                    FamilyBuildRequest lreq;
                    lreq.inst = &work;
                    lreq.parts = left_parts;
                    lreq.edge_reps = &reps_left;
                    lreq.middle = &mix.middle;
                    lreq.layer_targets = kl;
                    lreq.mixer_take = take_left;
                    lreq.slack = cfg.slack;
                    lreq.family_cap = cfg.family_cap;
                    FamilyBuildRequest rreq = lreq;
                    rreq.parts = right_parts;
                    rreq.edge_reps = &reps_right;
                    rreq.layer_targets = kr;
                    rreq.mixer_take = take_right;

                    st.family_builds += 2;
                    auto lf = build_side_q_families(lreq);
                    auto rf = build_side_q_families(rreq);
                    if (!lf || !rf) {
                        ++st.cap_skips;
                        continue;
                    }
                    uint64_t qmax = 1;
                    for (const auto& f : *lf) qmax = std::max<uint64_t>(qmax, f.size());
                    for (const auto& f : *rf) qmax = std::max<uint64_t>(qmax, f.size());
                    uint64_t fam_entries = family_total(*lf) + family_total(*rf) +
                                           reps_left.size() + reps_right.size();

                    // Small modulus p from the measured mixing strength.
                    uint32_t e = uint32_t(
                        std::max<int64_t>(1, int64_t(std::ceil((1.0 - mix.eps_middle) * m / 2.0))));
                    e = std::min(e, 40u);
                    auto pdraw =
                        uniform_prime_in(std::max<u128>(2, u128(1) << (e - 1)), u128(1) << e, rng);
                    if (!pdraw) continue;
                    uint64_t p = uint64_t(pdraw->value);
                    uint64_t r = rng.below(p);

                    // Second modulus sized so the expected candidate mass per
                    // (r, s) cell stays near the family budget.
                    double qd = std::exp2(double(n) / 2.0 - lam * double(n)) /
                                (double(qmax) * double(qmax)) * cfg.q_poly;
                    uint64_t qcap = std::max<uint64_t>(2, cfg.s_cap);
                    uint64_t qtop = qd > double(qcap) ? qcap : std::max<uint64_t>(2, uint64_t(qd));
                    if (qd > double(qcap)) st.modulus_clamped = true;
                    auto qdraw = uniform_prime_in(std::max<uint64_t>(2, qtop / 2), qtop, rng);
                    if (!qdraw) continue;
                    uint64_t q = uint64_t(qdraw->value);
                    if (q == p) {
                        // Coprimality rescue: step to the next prime.
                        u128 cand = q + 1;
                        while (cand < u128(qtop) + 64 && !is_prime(cand)) ++cand;
                        if (!is_prime(cand)) continue;
                        q = uint64_t(cand);
                    }

                    uint64_t ell = 0;
                    {
                        double first = double(qmax) * double(qmax) * double(qmax) * double(qmax) /
                                       (double(p) * double(q));
                        uint64_t comb = binom_saturating(m, std::max(take_left, take_right),
                                                         uint64_t(1) << 40);
                        double total = first + double(comb);
                        ell = total > double(uint64_t(1) << 40) ? (uint64_t(1) << 40)
                                                                : uint64_t(std::ceil(total));
                    }

                    std::array<const QFamily*, 4> lptr = {&(*lf)[0], &(*lf)[1], &(*lf)[2],
                                                          &(*lf)[3]};
                    std::array<const QFamily*, 4> rptr = {&(*rf)[0], &(*rf)[1], &(*rf)[2],
                                                          &(*rf)[3]};
                    i128 t_work = work.target;
                    uint64_t t_mod_p = uint64_t(((t_work % i128(p)) + i128(p)) % i128(p));

                    for (uint64_t s = 0; s < q; ++s) {
                        ++st.s_iterations;
                        SideBudget lb{p, q, r, s, ell};
                        SideFamilyResult lres = build_side_family(lptr, lb, m);
                        st.stream_pops += lres.ring.stream_pops;
                        if (lres.skipped) {
                            ++st.majority_skips;
                            continue;
                        }
                        uint64_t t_mod_q = uint64_t(((t_work % i128(q)) + i128(q)) % i128(q));
                        SideBudget rb{p, q, (t_mod_p + p - r % p) % p, (t_mod_q + q - s) % q, ell};
                        SideFamilyResult rres = build_side_family(rptr, rb, m);
                        st.stream_pops += rres.ring.stream_pops;
                        if (rres.skipped) {
                            ++st.majority_skips;
                            continue;
                        }
                        uint64_t live = fam_entries + lres.family.entries.size() +
                                        rres.family.entries.size() + lres.ring.peak_frontier +
                                        rres.ring.peak_frontier;
                        st.peak_entries = std::max(st.peak_entries, live);
                        ++st.wov_calls;
                        WovStats ws;
                        auto hit = solve_wov(lres.family, rres.family, t_work, &ws);
                        if (!hit) continue;
                        auto cert = certificate_from_payloads(
                            ctx, lres.family.entries[hit->first].payload,
                            rres.family.entries[hit->second].payload);
                        if (cert) {
                            st.found_by = "mixer";
                            st.alpha_found = alpha;
                            return cert;
                        }
                    }
                }
            }
        }
    }
    st.exhausted = !st.ran_delegate;
    return std::nullopt;
}

}  // namespace sslab
