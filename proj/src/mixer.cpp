#include "sslab/mixer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace sslab {

namespace {

std::vector<i128> all_subset_sums(const std::vector<i128>& items, uint32_t cap) {
    if (items.size() > cap)
        throw std::invalid_argument("mixer: set too large for subset-sum enumeration");
    std::vector<i128> sums;
    sums.reserve(size_t(1) << items.size());
    sums.push_back(0);
    for (i128 w : items) {
        size_t half = sums.size();
        for (size_t i = 0; i < half; ++i) sums.push_back(sums[i] + w);
    }
    return sums;
}

uint64_t distinct_count(std::vector<i128>& v) {
    std::sort(v.begin(), v.end());
    return uint64_t(std::unique(v.begin(), v.end()) - v.begin());
}

}  // namespace

uint64_t weight_count(const std::vector<i128>& items, const MixerLimits& limits) {
    auto sums = all_subset_sums(items, limits.enumeration_cap);
    return distinct_count(sums);
}

double epsilon_of(const std::vector<i128>& items, const MixerLimits& limits) {
    if (items.empty()) return 0.0;
    uint64_t wc = weight_count(items, limits);
    return 1.0 - std::log2(double(wc)) / double(items.size());
}

LayerChoice best_layer(const std::vector<i128>& items, const MixerLimits& limits) {
    const size_t n = items.size();
    if (n == 0) throw std::invalid_argument("best_layer: empty set");
    if (n == 1) return {1, 1};
    if (n > limits.enumeration_cap)
        throw std::invalid_argument("best_layer: set too large for subset-sum enumeration");
    std::vector<std::vector<i128>> by_size(n + 1);
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        i128 s = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s += items[i];
        by_size[std::popcount(mask)].push_back(s);
    }
    LayerChoice best{0, 0};
    for (uint32_t k = 1; k <= n / 2; ++k) {
        uint64_t c = distinct_count(by_size[k]);
        if (c > best.layer_count) best = {k, c};
    }
    return best;
}

MixerSample sample_mixers(const SubsetSumInstance& inst, double beta, RandomSource& rng,
                          const MixerLimits& limits) {
    uint32_t m = uint32_t(std::floor(beta * double(inst.n()) + 1e-9));
    if (3ull * m > inst.n())
        throw std::invalid_argument("sample_mixers: mixers would exceed the item count");
    MixerSample out;
    if (m == 0) return out;
    auto picked = rng.sample_indices(uint32_t(inst.n()), 3 * m);
    rng.shuffle(picked);
    std::array<std::vector<uint32_t>, 3> blocks;
    for (uint32_t i = 0; i < 3 * m; ++i) blocks[i / m].push_back(picked[i]);
    std::array<double, 3> eps;
    for (int b = 0; b < 3; ++b) {
        std::sort(blocks[b].begin(), blocks[b].end());
        std::vector<i128> w;
        for (uint32_t idx : blocks[b]) w.push_back(inst.items[idx]);
        eps[b] = epsilon_of(w, limits);
    }
    // Strongest mixer in the middle; the other two keep their draw order.
    int mid = 0;
    for (int b = 1; b < 3; ++b)
        if (eps[b] < eps[mid]) mid = b;
    std::array<int, 2> rest;
    int rc = 0;
    for (int b = 0; b < 3; ++b)
        if (b != mid) rest[rc++] = b;
    out.middle = std::move(blocks[mid]);
    out.eps_middle = eps[mid];
    out.left = std::move(blocks[rest[0]]);
    out.eps_left = eps[rest[0]];
    out.right = std::move(blocks[rest[1]]);
    out.eps_right = eps[rest[1]];
    return out;
}

}  // namespace sslab
