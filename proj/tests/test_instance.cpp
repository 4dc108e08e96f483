#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "sslab/instance.hpp"

using namespace sslab;

namespace {

SubsetSumInstance random_small(RandomSource& rng, uint32_t n, bool plant) {
    GenerateOptions opt;
    opt.n = n;
    opt.weight_bits = 10;
    if (plant) opt.solution_size = 1 + rng.below(n);
    return generate_instance(opt, rng).instance;
}

}  // namespace

TEST_CASE("certificate verification accepts exactly the right subsets") {
    SubsetSumInstance inst{{5, -3, 7, 11}, 9};
    CHECK(verify_certificate(inst, {{1, 2, 3}}) == false);  // -3+7+11 = 15
    CHECK(verify_certificate(inst, {{0, 1, 2}}));           // 5-3+7 = 9
    CHECK_FALSE(verify_certificate(inst, {{2, 0, 1}}));     // unsorted
    CHECK_FALSE(verify_certificate(inst, {{0, 0, 2}}));     // duplicate
    CHECK_FALSE(verify_certificate(inst, {{0, 4}}));        // out of range
    CHECK_FALSE(verify_certificate(inst, {{}}));            // empty sums to 0 != 9
    SubsetSumInstance zero{{1, 2}, 0};
    CHECK(verify_certificate(zero, {{}}));
    CHECK(certificate_sum(inst, {{0, 2}}) == 12);
}

TEST_CASE("planted instances verify and respect the requested size") {
    RandomSource rng(201);
    for (int i = 0; i < 200; ++i) {
        uint32_t n = 1 + rng.below(24);
        GenerateOptions opt;
        opt.n = n;
        opt.weight_bits = 16;
        opt.solution_size = rng.below(n + 1);
        auto gen = generate_instance(opt, rng);
        REQUIRE(gen.planted.has_value());
        CHECK(gen.planted->indices.size() == *opt.solution_size);
        CHECK(verify_certificate(gen.instance, *gen.planted));
        for (i128 w : gen.instance.items) {
            CHECK(w >= -(i128(1) << 16));
            CHECK(w <= (i128(1) << 16));
        }
    }
}

TEST_CASE("generator rejects capacity-busting weight widths") {
    RandomSource rng(202);
    GenerateOptions opt;
    opt.n = 64;
    opt.weight_bits = 119;  // 119 + ceil(log2 65) = 126 > 120
    CHECK_THROWS_AS((void)generate_instance(opt, rng), std::invalid_argument);
    opt.weight_bits = 110;
    CHECK_NOTHROW((void)generate_instance(opt, rng));
}

TEST_CASE("dp oracle agrees with exhaustive enumeration") {
    RandomSource rng(203);
    for (int i = 0; i < 300; ++i) {
        uint32_t n = 1 + rng.below(14);
        SubsetSumInstance inst = random_small(rng, n, i % 2 == 0);
        auto truth = oracle::exhaustive_subset_sum(inst);
        OracleResult res = dp_oracle(inst);
        REQUIRE(res.status != OracleStatus::refused);
        CHECK((res.status == OracleStatus::found) == truth.has_value());
        if (res.certificate) CHECK(verify_certificate(inst, *res.certificate));
    }
}

TEST_CASE("dp oracle table path agrees with the half-enumeration path") {
    RandomSource rng(204);
    OracleLimits force_table;
    force_table.n_cap = 0;  // push everything through the mass-bounded table
    for (int i = 0; i < 150; ++i) {
        uint32_t n = 1 + rng.below(16);
        SubsetSumInstance inst = random_small(rng, n, i % 2 == 0);
        OracleResult a = dp_oracle(inst);
        OracleResult b = dp_oracle(inst, force_table);
        REQUIRE(a.status != OracleStatus::refused);
        REQUIRE(b.status != OracleStatus::refused);
        CHECK(a.status == b.status);
        if (b.certificate) CHECK(verify_certificate(inst, *b.certificate));
    }
}

TEST_CASE("dp oracle refuses what it cannot afford") {
    SubsetSumInstance big;
    RandomSource rng(205);
    for (int i = 0; i < 40; ++i) big.items.push_back(rng.signed_magnitude(u128(1) << 40));
    big.target = 1;
    CHECK(dp_oracle(big).status == OracleStatus::refused);
    // Same n but tiny mass: the table path admits it.
    SubsetSumInstance small;
    for (int i = 0; i < 40; ++i) small.items.push_back(i % 5);
    small.target = 7;
    CHECK(dp_oracle(small).status == OracleStatus::found);
}

TEST_CASE("ksum padding bookkeeping") {
    auto k = make_ksum({{3, 1}, {5}, {2, 2, 2}, {0}}, 7);
    CHECK(k.arity() == 4);
    for (const auto& arr : k.arrays) CHECK(arr.size() == 3);
    CHECK(k.real_sizes == std::vector<size_t>{2, 1, 3, 1});
    CHECK(k.arrays[1][1] == ksum_sentinel);
    CHECK_NOTHROW(k.validate());
    k.real_sizes[0] = 9;
    CHECK_THROWS_AS(k.validate(), std::invalid_argument);
}

TEST_CASE("planted ksum instances contain their witness") {
    RandomSource rng(206);
    for (int i = 0; i < 100; ++i) {
        KSumGenerateOptions opt;
        opt.length = 1 + rng.below(12);
        opt.arity = 4;
        opt.plant = true;
        auto gen = generate_ksum(opt, rng);
        REQUIRE(gen.planted.has_value());
        i128 s = 0;
        for (size_t j = 0; j < 4; ++j) s += gen.instance.arrays[j][(*gen.planted)[j]];
        CHECK(s == gen.instance.target);
    }
}

TEST_CASE("unplanted ksum instances are unsatisfiable by construction") {
    RandomSource rng(207);
    for (int i = 0; i < 50; ++i) {
        KSumGenerateOptions opt;
        opt.length = 1 + rng.below(8);
        opt.plant = false;
        auto gen = generate_ksum(opt, rng);
        CHECK_FALSE(gen.planted.has_value());
        CHECK_FALSE(oracle::brute_four_sum(gen.instance).has_value());
    }
}

TEST_CASE("subset sum to 4-SUM reduction preserves the answer") {
    RandomSource rng(208);
    for (int i = 0; i < 60; ++i) {
        uint32_t n = 1 + rng.below(14);
        SubsetSumInstance inst = random_small(rng, n, i % 2 == 0);
        Reduced4Sum red = reduce_subsetsum_to_4sum(inst);
        // Block masks partition the item range.
        uint64_t seen = 0;
        for (size_t j = 0; j < 4; ++j) {
            uint64_t block = 0;
            for (uint64_t m : red.masks[j]) block |= m;
            CHECK((seen & block) == 0);
            seen |= block;
            // Arrays are sentinel-padded to a common length; masks track the
            // real entries only.
            CHECK(red.ksum.real_sizes[j] == red.masks[j].size());
            CHECK(red.ksum.arrays[j].size() >= red.masks[j].size());
        }
        CHECK(seen + 1 == (uint64_t(1) << n));
        bool truth = oracle::exhaustive_subset_sum(inst).has_value();
        auto hit = oracle::brute_four_sum(red.ksum);
        CHECK(hit.has_value() == truth);
        if (hit) {
            auto cert = certificate_from_masks(red, *hit);
            CHECK(verify_certificate(inst, cert));
        }
    }
}

TEST_CASE("2k-SUM fusion keeps solutions addressable") {
    RandomSource rng(209);
    for (int i = 0; i < 40; ++i) {
        KSumGenerateOptions opt;
        opt.length = 3;
        opt.arity = (i % 2 == 0) ? 8 : 6;
        opt.plant = i % 3 != 0;
        auto gen = generate_ksum(opt, rng);
        auto red = reduce_2ksum_to_4sum(gen.instance);
        CHECK(red.ksum.arity() == 4);
        bool truth = oracle::brute_ksum(gen.instance).has_value();
        auto hit = oracle::brute_four_sum(red.ksum);
        REQUIRE(hit.has_value() == truth);
        if (hit) {
            // Translate the fused pick back to one index per source array and
            // re-add the original entries.
            i128 s = 0;
            for (size_t g = 0; g < 4; ++g) {
                const auto& tuple = red.index_tuples[g][(*hit)[g]];
                REQUIRE(tuple.size() == red.source_arrays[g].size());
                for (size_t j = 0; j < tuple.size(); ++j) {
                    uint32_t src = red.source_arrays[g][j];
                    if (src < gen.instance.arity())
                        s += gen.instance.arrays[src][tuple[j]];
                }
            }
            CHECK(s == gen.instance.target);
        }
    }
}

TEST_CASE("text and json round trips") {
    RandomSource rng(210);
    GeneratedInstance gen;
    gen.instance.items = {1, -2, (i128(3) << 100), 0, -(i128(7) << 90)};
    gen.instance.target = (i128(3) << 100) - 1;
    gen.planted = SolutionCertificate{{0, 2, 4}};

    std::stringstream text;
    write_instance_text(text, gen.instance);
    SubsetSumInstance t = read_instance_text(text);
    CHECK(t.items == gen.instance.items);
    CHECK(t.target == gen.instance.target);

    std::stringstream json;
    write_instance_json(json, gen);
    GeneratedInstance j = read_instance_json(json);
    CHECK(j.instance.items == gen.instance.items);
    CHECK(j.instance.target == gen.instance.target);
    REQUIRE(j.planted.has_value());
    CHECK(j.planted->indices == gen.planted->indices);
}

TEST_CASE("malformed inputs are rejected") {
    std::stringstream bad1("3 5\n1 2\n");  // one weight short
    CHECK_THROWS(read_instance_text(bad1));
    std::stringstream bad2("{\"items\": [1, 2]}");  // no target
    CHECK_THROWS(read_instance_json(bad2));
    std::stringstream bad3("{\"items\": [1, \"zz\"], \"target\": 0}");
    CHECK_THROWS(read_instance_json(bad3));
}
