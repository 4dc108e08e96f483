#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sslab/streams.hpp"

using namespace sslab;

namespace {

std::vector<i128> random_values(RandomSource& rng, size_t n, int64_t mag) {
    std::vector<i128> v(n);
    for (auto& x : v) x = rng.range_i64(-mag, mag);
    return v;
}

}  // namespace

TEST_CASE("two_sum walks opposite ends") {
    std::vector<i128> a{1, 2, 3}, b{-3, -2, 0};
    auto hit = two_sum(a, b, 0);
    REQUIRE(hit.has_value());
    CHECK(hit->first == 2);
    CHECK(hit->second == 0);
    CHECK_FALSE(two_sum(a, b, 100).has_value());
    CHECK_FALSE(two_sum({}, b, 0).has_value());
    std::vector<i128> unsorted{3, 1};
    CHECK_THROWS_AS((void)two_sum(unsorted, b, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)two_sum(a, unsorted, 0), std::invalid_argument);
}

TEST_CASE("two_sum agrees with a quadratic scan on random inputs") {
    RandomSource rng(401);
    for (int i = 0; i < 500; ++i) {
        auto a = random_values(rng, rng.below(12), 20);
        auto b = random_values(rng, rng.below(12), 20);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        i128 t = rng.range_i64(-40, 40);
        bool exists = false;
        for (i128 x : a)
            for (i128 y : b) exists |= (x + y == t);
        auto hit = two_sum(a, b, t);
        REQUIRE(hit.has_value() == exists);
        if (hit) CHECK(a[hit->first] + b[hit->second] == t);
    }
}

TEST_CASE("sorted sum stream emits the full cross product in order") {
    RandomSource rng(402);
    for (int iter = 0; iter < 1000; ++iter) {
        size_t nl = rng.below(12), nr = rng.below(12);
        auto left = random_values(rng, nl, 25);   // small range forces ties
        auto right = random_values(rng, nr, 25);
        StreamOrder order = (iter % 2 == 0) ? StreamOrder::increasing : StreamOrder::decreasing;
        SortedSumStream stream(left, right, order);
        CHECK(stream.total() == uint64_t(nl) * nr);

        std::multiset<i128> expected;
        for (i128 x : left)
            for (i128 y : right) expected.insert(x + y);

        std::multiset<i128> got;
        std::optional<SumPair> prev;
        uint64_t pops = 0;
        while (auto p = stream.pop()) {
            ++pops;
            CHECK(p->left < nl);
            CHECK(p->right < nr);
            CHECK(left[p->left] + right[p->right] == p->sum);
            CHECK(stream.frontier_size() <= std::min(nl, nr));
            if (prev) {
                if (order == StreamOrder::increasing)
                    CHECK(prev->sum <= p->sum);
                else
                    CHECK(prev->sum >= p->sum);
                if (prev->sum == p->sum) {
                    // Ties come out in (left, right) lexicographic order.
                    bool lex = prev->left < p->left ||
                               (prev->left == p->left && prev->right < p->right);
                    CHECK(lex);
                }
            }
            prev = *p;
            got.insert(p->sum);
        }
        CHECK(pops == stream.total());
        CHECK(stream.emitted() == pops);
        CHECK(got == expected);
        CHECK(stream.peak_frontier() <= std::min(nl, nr));
        CHECK_FALSE(stream.pop().has_value());
        CHECK(stream.peek() == nullptr);
    }
}

TEST_CASE("peek is stable and does not consume") {
    SortedSumStream s({1, 4}, {0, 2}, StreamOrder::increasing);
    const SumPair* p1 = s.peek();
    REQUIRE(p1 != nullptr);
    i128 first = p1->sum;
    CHECK(s.peek()->sum == first);
    auto popped = s.pop();
    REQUIRE(popped.has_value());
    CHECK(popped->sum == first);
    CHECK(popped->sum == 1);  // 1 + 0
}

TEST_CASE("meet in the middle solvers agree with exhaustive search") {
    RandomSource rng(403);
    for (int i = 0; i < 500; ++i) {
        uint32_t n = 1 + rng.below(16);
        GenerateOptions opt;
        opt.n = n;
        opt.weight_bits = 10;
        if (i % 2 == 0) opt.solution_size = rng.below(n + 1);
        auto gen = generate_instance(opt, rng);
        bool truth = oracle::exhaustive_subset_sum(gen.instance).has_value();

        SolveStats hs_stats, ss_stats;
        auto hs = horowitz_sahni(gen.instance, &hs_stats);
        auto ss = schroeppel_shamir(gen.instance, &ss_stats);
        CHECK(hs.has_value() == truth);
        CHECK(ss.has_value() == truth);
        if (hs) CHECK(verify_certificate(gen.instance, *hs));
        if (ss) CHECK(verify_certificate(gen.instance, *ss));
    }
}

TEST_CASE("solver edge cases") {
    SubsetSumInstance empty{{}, 0};
    auto a = horowitz_sahni(empty);
    REQUIRE(a.has_value());
    CHECK(a->indices.empty());
    auto b = schroeppel_shamir(empty);
    REQUIRE(b.has_value());
    CHECK(b->indices.empty());
    SubsetSumInstance impossible{{}, 5};
    CHECK_FALSE(horowitz_sahni(impossible).has_value());
    CHECK_FALSE(schroeppel_shamir(impossible).has_value());
    SubsetSumInstance one{{7}, 7};
    auto c = schroeppel_shamir(one);
    REQUIRE(c.has_value());
    CHECK(c->indices == std::vector<uint32_t>{0});
    SubsetSumInstance too_big{std::vector<i128>(49, 1), 3};
    CHECK_THROWS_AS((void)horowitz_sahni(too_big), std::invalid_argument);
    CHECK_THROWS_AS((void)schroeppel_shamir(too_big), std::invalid_argument);
}

TEST_CASE("four-table solver uses a quarter-size working set") {
    // On a no-instance every stream is drained, making peak sizes comparable.
    SubsetSumInstance inst;
    RandomSource rng(404);
    for (int i = 0; i < 24; ++i) inst.items.push_back(1 + i128(rng.below(1 << 16)));
    inst.target = -7;  // unreachable: all items positive
    SolveStats hs_stats, ss_stats;
    CHECK_FALSE(horowitz_sahni(inst, &hs_stats).has_value());
    CHECK_FALSE(schroeppel_shamir(inst, &ss_stats).has_value());
    CHECK(hs_stats.peak_entries >= (uint64_t(1) << 13));       // two 2^12 tables
    CHECK(ss_stats.peak_entries <= 8 * (uint64_t(1) << 6));    // quarter tables + frontiers
    CHECK(ss_stats.peak_entries * 4 < hs_stats.peak_entries);  // the point of the exercise
    CHECK(ss_stats.stream_pops > 0);
}

TEST_CASE("four_sum matches brute force") {
    RandomSource rng(405);
    for (int i = 0; i < 300; ++i) {
        KSumGenerateOptions opt;
        opt.length = 1 + rng.below(8);
        opt.arity = 4;
        opt.plant = i % 2 == 0;
        auto gen = generate_ksum(opt, rng);
        auto brute = oracle::brute_four_sum(gen.instance);
        auto fast = four_sum(gen.instance);
        REQUIRE(fast.has_value() == brute.has_value());
        if (fast) {
            i128 s = 0;
            for (size_t j = 0; j < 4; ++j) {
                CHECK((*fast)[j] < gen.instance.real_sizes[j]);
                s += gen.instance.arrays[j][(*fast)[j]];
            }
            CHECK(s == gen.instance.target);
        }
    }
}

TEST_CASE("four_sum respects sentinel padding") {
    // 1 + 1 + 4 + 1 == 7 only if the padded slot (value sentinel) is ignored.
    auto k = make_ksum({{1}, {1, 9}, {4}, {1}}, 7);
    auto hit = four_sum(k);
    REQUIRE(hit.has_value());
    CHECK((*hit)[1] == 0);
    auto k2 = make_ksum({{1}, {9, 1}, {4}, {1}}, 7);
    auto hit2 = four_sum(k2);
    REQUIRE(hit2.has_value());
    CHECK((*hit2)[1] == 1);
}
