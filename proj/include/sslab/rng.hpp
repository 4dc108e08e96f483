#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "sslab/int128.hpp"

namespace sslab {

// Thin wrapper around mt19937_64 that avoids std::uniform_int_distribution,
// whose output is not pinned by the standard. All randomized results in the
// lab must reproduce bit-for-bit across toolchains for a given seed.
class RandomSource {
public:
    explicit RandomSource(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound) by rejection sampling. bound > 0.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("RandomSource::below: bound must be positive");
        if ((bound & (bound - 1)) == 0) return eng_() & (bound - 1);
        uint64_t zone = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            uint64_t v = eng_();
            if (v < zone) return v % bound;
        }
    }

    // Uniform in [lo, hi], inclusive.
    uint64_t range_u64(uint64_t lo, uint64_t hi) {
        if (lo > hi) throw std::invalid_argument("RandomSource::range_u64: empty range");
        uint64_t span = hi - lo;
        if (span == UINT64_MAX) return eng_();
        return lo + below(span + 1);
    }

    int64_t range_i64(int64_t lo, int64_t hi) {
        return int64_t(uint64_t(lo) + below(uint64_t(hi) - uint64_t(lo) + 1));
    }

    // Uniform in [0, bound) for bounds beyond 64 bits.
    u128 below_u128(u128 bound) {
        if (bound == 0) throw std::invalid_argument("RandomSource::below_u128: bound must be positive");
        if (bound <= u128(UINT64_MAX)) return below(uint64_t(bound));
        u128 zone = ~u128(0) - ~u128(0) % bound;
        for (;;) {
            u128 v = (u128(eng_()) << 64) | eng_();
            if (v < zone) return v % bound;
        }
    }

    // Uniform signed value with |v| <= magnitude.
    i128 signed_magnitude(u128 magnitude) {
        u128 raw = below_u128(2 * magnitude + 1);
        return i128(raw) - i128(magnitude);
    }

    double unit() { return double(eng_() >> 11) * 0x1.0p-53; }

    bool coin() { return (eng_() & 1) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    // k distinct values from [0, n) in sorted order.
    std::vector<uint32_t> sample_indices(uint32_t n, uint32_t k);

    uint64_t fork_seed() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

inline std::vector<uint32_t> RandomSource::sample_indices(uint32_t n, uint32_t k) {
    if (k > n) throw std::invalid_argument("sample_indices: k > n");
    std::vector<uint32_t> pool(n);
    for (uint32_t i = 0; i < n; ++i) pool[i] = i;
    for (uint32_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(n - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace sslab
