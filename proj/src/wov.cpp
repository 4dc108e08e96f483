#include "sslab/wov.hpp"

#include <algorithm>
#include <stdexcept>

namespace sslab {

std::optional<std::pair<size_t, size_t>> solve_ov(const std::vector<uint64_t>& a,
                                                  const std::vector<uint64_t>& b,
                                                  uint64_t* pairs_scanned) {
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            if (pairs_scanned) ++*pairs_scanned;
            if ((a[i] & b[j]) == 0) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

namespace {

// Entry indices sorted by (weight, index); group boundaries on weight change.
std::vector<size_t> sorted_order(const WeightedSetFamily& f) {
    std::vector<size_t> ord(f.entries.size());
    for (size_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](size_t x, size_t y) {
        if (f.entries[x].weight != f.entries[y].weight)
            return f.entries[x].weight < f.entries[y].weight;
        return x < y;
    });
    return ord;
}

}  // namespace

std::optional<std::pair<size_t, size_t>> solve_wov(const WeightedSetFamily& a,
                                                   const WeightedSetFamily& b, i128 t,
                                                   WovStats* stats) {
    if (a.universe != b.universe)
        throw std::invalid_argument("solve_wov: families over different universes");
    if (a.universe > 64) throw std::invalid_argument("solve_wov: universe exceeds 64 bits");
    auto ao = sorted_order(a);
    auto bo = sorted_order(b);
    size_t ia = 0;
    size_t ib = bo.size();
    auto group_end = [](const WeightedSetFamily& f, const std::vector<size_t>& ord, size_t from) {
        size_t to = from;
        while (to < ord.size() && f.entries[ord[to]].weight == f.entries[ord[from]].weight) ++to;
        return to;
    };
    auto group_begin_before = [](const WeightedSetFamily& f, const std::vector<size_t>& ord,
                                 size_t end) {
        size_t from = end;
        while (from > 0 && f.entries[ord[from - 1]].weight == f.entries[ord[end - 1]].weight)
            --from;
        return from;
    };
    // ia walks a's weights ascending; ib walks b's descending (as group ends).
    while (ia < ao.size() && ib > 0) {
        size_t ae = group_end(a, ao, ia);
        size_t bb = group_begin_before(b, bo, ib);
        i128 s = a.entries[ao[ia]].weight + b.entries[bo[bb]].weight;
        if (s == t) {
            if (stats) ++stats->weight_groups_touched;
            std::vector<uint64_t> am, bm;
            am.reserve(ae - ia);
            bm.reserve(ib - bb);
            for (size_t i = ia; i < ae; ++i) am.push_back(a.entries[ao[i]].mask);
            for (size_t j = bb; j < ib; ++j) bm.push_back(b.entries[bo[j]].mask);
            auto hit = solve_ov(am, bm, stats ? &stats->ov_pairs_scanned : nullptr);
            if (hit) return std::make_pair(ao[ia + hit->first], bo[bb + hit->second]);
            ia = ae;
            ib = bb;
        } else if (s < t) {
            ia = ae;
        } else {
            ib = bb;
        }
    }
    return std::nullopt;
}

}  // namespace sslab
