#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sslab/int128.hpp"

namespace sslab {

struct WeightedSetEntry {
    uint64_t mask = 0;     // characteristic vector over the shared universe
    i128 weight = 0;
    uint64_t payload = 0;  // caller bookkeeping, carried through untouched
};

struct WeightedSetFamily {
    uint32_t universe = 0;  // bit width the masks live in
    std::vector<WeightedSetEntry> entries;
};

struct WovStats {
    uint64_t weight_groups_touched = 0;  // matched weight-group pairs
    uint64_t ov_pairs_scanned = 0;       // mask pairs tested for disjointness
};

// First pair of disjoint masks, scan order (a index, then b index).
std::optional<std::pair<size_t, size_t>> solve_ov(const std::vector<uint64_t>& a,
                                                  const std::vector<uint64_t>& b,
                                                  uint64_t* pairs_scanned = nullptr);

// Pair (i, j) with a.entries[i].weight + b.entries[j].weight == t and
// disjoint masks. Groups entries by exact weight and walks the two group
// sequences with opposing pointers, delegating each matched pair of groups
// to the orthogonal-vectors scan.
std::optional<std::pair<size_t, size_t>> solve_wov(const WeightedSetFamily& a,
                                                   const WeightedSetFamily& b, i128 t,
                                                   WovStats* stats = nullptr);

}  // namespace sslab
