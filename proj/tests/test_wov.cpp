#include "doctest.h"
#include "oracles.hpp"
#include "sslab/wov.hpp"

using namespace sslab;

namespace {

WeightedSetFamily random_family(RandomSource& rng, uint32_t universe, size_t max_entries) {
    WeightedSetFamily f;
    f.universe = universe;
    size_t count = rng.below(max_entries + 1);
    uint64_t space = universe >= 64 ? ~uint64_t(0) : (uint64_t(1) << universe) - 1;
    for (size_t i = 0; i < count; ++i) {
        WeightedSetEntry e;
        e.mask = rng.next_u64() & space;
        e.weight = rng.range_i64(-12, 12);  // tight range: plenty of weight groups collide
        e.payload = rng.next_u64();
        f.entries.push_back(e);
    }
    return f;
}

}  // namespace

TEST_CASE("orthogonal pair scan finds the first disjoint pair") {
    std::vector<uint64_t> a{0b011, 0b100};
    std::vector<uint64_t> b{0b011, 0b110, 0b001};
    uint64_t scanned = 0;
    auto hit = solve_ov(a, b, &scanned);
    REQUIRE(hit.has_value());
    // Row-major: 0b011 overlaps every b entry, so the first disjoint pair
    // is a[1] = 0b100 against b[0] = 0b011, after four probes.
    CHECK(hit->first == 1);
    CHECK(hit->second == 0);
    CHECK(scanned == 4);
    CHECK_FALSE(solve_ov({0b1}, {0b1}).has_value());
    CHECK_FALSE(solve_ov({}, {0b1}).has_value());
}

TEST_CASE("weighted disjoint-pair search matches the quadratic oracle") {
    RandomSource rng(601);
    for (int iter = 0; iter < 1000; ++iter) {
        uint32_t universe = 1 + rng.below(16);
        WeightedSetFamily a = random_family(rng, universe, 200);
        WeightedSetFamily b = random_family(rng, universe, 200);
        i128 t = rng.range_i64(-20, 20);
        WovStats stats;
        auto fast = solve_wov(a, b, t, &stats);
        auto brute = oracle::brute_wov(a, b, t);
        REQUIRE(fast.has_value() == brute.has_value());
        if (fast) {
            const auto& ea = a.entries[fast->first];
            const auto& eb = b.entries[fast->second];
            CHECK((ea.mask & eb.mask) == 0);
            CHECK(ea.weight + eb.weight == t);
        }
        CHECK(stats.ov_pairs_scanned <= uint64_t(a.entries.size()) * b.entries.size());
    }
}

TEST_CASE("payloads ride along untouched") {
    WeightedSetFamily a, b;
    a.universe = b.universe = 4;
    a.entries = {{0b0001, 5, 111}, {0b0010, 3, 222}};
    b.entries = {{0b0001, 4, 333}, {0b0100, 4, 444}};
    auto hit = solve_wov(a, b, 7);
    REQUIRE(hit.has_value());
    CHECK(a.entries[hit->first].payload == 222);  // 3 + 4, masks 0b0010 / 0b0001
    CHECK(b.entries[hit->second].payload == 333);
}

TEST_CASE("weighted search rejects incompatible universes") {
    WeightedSetFamily a, b;
    a.universe = 8;
    b.universe = 9;
    CHECK_THROWS_AS((void)solve_wov(a, b, 0), std::invalid_argument);
    a.universe = 65;
    b.universe = 65;
    CHECK_THROWS_AS((void)solve_wov(a, b, 0), std::invalid_argument);
}

TEST_CASE("weight grouping prunes the scan") {
    // Two families whose weights never combine to the target: no mask pair
    // should ever be tested.
    WeightedSetFamily a, b;
    a.universe = b.universe = 8;
    for (int i = 0; i < 50; ++i) {
        a.entries.push_back({uint64_t(i % 4), i128(2 * i), 0});
        b.entries.push_back({uint64_t(i % 4), i128(2 * i + 1), 0});
    }
    WovStats stats;
    CHECK_FALSE(solve_wov(a, b, 10000, &stats).has_value());
    CHECK(stats.ov_pairs_scanned == 0);
    CHECK(stats.weight_groups_touched == 0);
}

TEST_CASE("empty families are handled") {
    WeightedSetFamily a, b;
    a.universe = b.universe = 4;
    CHECK_FALSE(solve_wov(a, b, 0).has_value());
    a.entries.push_back({0, 0, 0});
    CHECK_FALSE(solve_wov(a, b, 0).has_value());
    b.entries.push_back({0, 0, 0});
    auto hit = solve_wov(a, b, 0);
    REQUIRE(hit.has_value());  // two empty masks are disjoint and sum to 0
}
