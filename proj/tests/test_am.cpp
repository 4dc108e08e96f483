#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sslab/am.hpp"
#include "sslab/instance.hpp"

using namespace sslab;

namespace {

// Residue-filtered pair count the verifier should build: values deduplicated
// per array first, then all (x, y) with x + y = r (mod p).
uint64_t expected_a12(const KSumInstance& inst, size_t ai, size_t bi, uint64_t p, uint64_t rho) {
    std::set<i128> xs(inst.arrays[ai].begin(), inst.arrays[ai].begin() + inst.real_sizes[ai]);
    std::set<i128> ys(inst.arrays[bi].begin(), inst.arrays[bi].begin() + inst.real_sizes[bi]);
    uint64_t count = 0;
    for (i128 x : xs)
        for (i128 y : ys)
            if (oracle::floor_mod(x + y, p) == rho % p) ++count;
    return count;
}

}  // namespace

TEST_CASE("honest proofs always convince the verifier") {
    RandomSource rng(701);
    for (int iter = 0; iter < 150; ++iter) {
        KSumGenerateOptions opt;
        opt.length = 2 + rng.below(24);
        opt.plant = true;
        auto gen = generate_ksum(opt, rng);
        std::array<uint32_t, 4> w{(*gen.planted)[0], (*gen.planted)[1], (*gen.planted)[2],
                                  (*gen.planted)[3]};
        uint64_t p = uint64_t(uniform_prime_in(2, 200, rng)->value);
        uint64_t r = honest_proof(gen.instance, w, p);
        CHECK(r < p);
        ProtocolParams params;
        params.cutoff_c = -1.0;  // exact mode: no cutoff excuses
        VerifierOutcome out = run_verifier(gen.instance, p, r, params);
        REQUIRE(out.accepted);
        REQUIRE(out.witness.has_value());
        i128 s = 0;
        for (size_t j = 0; j < 4; ++j) {
            CHECK((*out.witness)[j] < gen.instance.real_sizes[j]);
            s += gen.instance.arrays[j][(*out.witness)[j]];
        }
        CHECK(s == gen.instance.target);
    }
}

TEST_CASE("no proof exists for a no-instance") {
    RandomSource rng(702);
    for (int iter = 0; iter < 40; ++iter) {
        KSumGenerateOptions opt;
        opt.length = 2 + rng.below(10);
        opt.plant = false;
        auto gen = generate_ksum(opt, rng);
        REQUIRE_FALSE(oracle::brute_four_sum(gen.instance).has_value());
        for (uint64_t p : {2, 3, 5, 7, 11}) {
            for (uint64_t r = 0; r < p; ++r) {
                VerifierOutcome out = run_verifier(gen.instance, p, r);
                CHECK_FALSE(out.accepted);
                CHECK_FALSE(out.witness.has_value());
            }
        }
    }
}

TEST_CASE("filtered list sizes match the residue census") {
    RandomSource rng(703);
    for (int iter = 0; iter < 100; ++iter) {
        KSumGenerateOptions opt;
        opt.length = 1 + rng.below(12);
        opt.plant = iter % 2 == 0;
        auto gen = generate_ksum(opt, rng);
        uint64_t p = uint64_t(uniform_prime_in(2, 50, rng)->value);
        uint64_t r = rng.below(p);
        ProtocolParams params;
        params.cutoff_c = -1.0;
        VerifierOutcome out = run_verifier(gen.instance, p, r, params);
        uint64_t rho34 =
            uint64_t(oracle::floor_mod(gen.instance.target, p) + p - r) % p;
        CHECK(out.a12_size == expected_a12(gen.instance, 0, 1, p, r));
        CHECK(out.a34_size == expected_a12(gen.instance, 2, 3, p, rho34));
    }
}

TEST_CASE("the cutoff is a hard budget") {
    RandomSource rng(704);
    KSumGenerateOptions opt;
    opt.length = 32;
    opt.plant = true;
    auto gen = generate_ksum(opt, rng);
    std::array<uint32_t, 4> w{(*gen.planted)[0], (*gen.planted)[1], (*gen.planted)[2],
                              (*gen.planted)[3]};
    uint64_t p = 2;  // worst filter: half of all pairs survive
    uint64_t r = honest_proof(gen.instance, w, p);
    ProtocolParams zero;
    zero.cutoff_c = 0.0;
    VerifierOutcome out = run_verifier(gen.instance, p, r, zero);
    CHECK_FALSE(out.accepted);
    CHECK(out.cutoff_hit);
    ProtocolParams ample;
    ample.cutoff_c = -1.0;
    VerifierOutcome full = run_verifier(gen.instance, p, r, ample);
    CHECK(full.accepted);
    CHECK_FALSE(full.cutoff_hit);
}

TEST_CASE("verifier rejects malformed calls") {
    RandomSource rng(705);
    KSumGenerateOptions opt;
    opt.length = 3;
    opt.arity = 3;
    auto gen = generate_ksum(opt, rng);
    CHECK_THROWS_AS((void)run_verifier(gen.instance, 5, 0), std::invalid_argument);
    opt.arity = 4;
    auto ok = generate_ksum(opt, rng);
    CHECK_THROWS_AS((void)run_verifier(ok.instance, 1, 0), std::invalid_argument);
    // An oversized proof is folded into the residue ring, not an error.
    VerifierOutcome folded = run_verifier(ok.instance, 5, 7);
    VerifierOutcome direct = run_verifier(ok.instance, 5, 2);
    CHECK(folded.accepted == direct.accepted);
    CHECK(folded.a12_size == direct.a12_size);
}

TEST_CASE("protocol simulation statistics") {
    RandomSource rng(706);
    KSumGenerateOptions opt;
    opt.length = 64;
    opt.plant = true;
    auto gen = generate_ksum(opt, rng);
    std::array<uint32_t, 4> w{(*gen.planted)[0], (*gen.planted)[1], (*gen.planted)[2],
                              (*gen.planted)[3]};
    ProtocolParams params;  // default c = 8: roomy at this size
    SimulationReport rep = simulate_protocol(gen.instance, w, 200, params, rng);
    CHECK(rep.trials == 200);
    CHECK(rep.accepts == 200);  // honest prover, cutoff never binds at n = 64
    CHECK(rep.accept_rate == 1.0);
    CHECK(rep.mean_a12 > 0.0);
    CHECK(rep.max_a12 >= uint64_t(rep.mean_a12));

    opt.plant = false;
    auto no = generate_ksum(opt, rng);
    SimulationReport rej = simulate_protocol(no.instance, std::nullopt, 300, params, rng);
    CHECK(rej.accepts == 0);
    CHECK(rej.accept_rate == 0.0);
}

TEST_CASE("proof enumeration decides exactly like the oracle") {
    RandomSource rng(707);
    for (int iter = 0; iter < 200; ++iter) {
        uint32_t n = 1 + rng.below(14);
        GenerateOptions opt;
        opt.n = n;
        opt.weight_bits = 10;
        if (iter % 2 == 0) opt.solution_size = rng.below(n + 1);
        auto gen = generate_instance(opt, rng);
        bool truth = oracle::exhaustive_subset_sum(gen.instance).has_value();
        EnumerationParams params;
        EnumerationStats stats;
        auto cert = solve_by_proof_enumeration(gen.instance, params, rng, &stats);
        REQUIRE(cert.has_value() == truth);
        if (cert) CHECK(verify_certificate(gen.instance, *cert));
        // target == 0 short-circuits before any residue is enumerated
        if (n > 2 && gen.instance.target != 0) CHECK(stats.residues_tried > 0);
    }
}

TEST_CASE("proof enumeration survives a starved cutoff") {
    // Even with a cutoff that rejects nearly everything, the final uncapped
    // round keeps the answer exact.
    RandomSource rng(708);
    for (int iter = 0; iter < 50; ++iter) {
        uint32_t n = 4 + rng.below(10);
        GenerateOptions opt;
        opt.n = n;
        opt.weight_bits = 8;
        opt.solution_size = n / 2;
        auto gen = generate_instance(opt, rng);
        EnumerationParams params;
        params.protocol.cutoff_c = 0.001;
        auto cert = solve_by_proof_enumeration(gen.instance, params, rng);
        REQUIRE(cert.has_value());
        CHECK(verify_certificate(gen.instance, *cert));
    }
}

TEST_CASE("proof enumeration trivial targets") {
    RandomSource rng(709);
    SubsetSumInstance zero{{3, -3, 9}, 0};
    EnumerationParams params;
    auto cert = solve_by_proof_enumeration(zero, params, rng);
    REQUIRE(cert.has_value());
    CHECK(cert->indices.empty());
    SubsetSumInstance no{{2, 4}, 1};
    CHECK_FALSE(solve_by_proof_enumeration(no, params, rng).has_value());
}
