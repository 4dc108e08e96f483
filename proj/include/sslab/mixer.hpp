#pragma once

#include <cstdint>
#include <vector>

#include "sslab/instance.hpp"
#include "sslab/int128.hpp"
#include "sslab/rng.hpp"

namespace sslab {

struct MixerLimits {
    uint32_t enumeration_cap = 22;  // largest |A| whose 2^|A| subset sums we enumerate
};

// Number of distinct subset sums of the given items.
uint64_t weight_count(const std::vector<i128>& items, const MixerLimits& limits = {});

// Mixing defect: |w(2^A)| = 2^((1-eps)|A|). Empty input counts as a perfect mixer.
double epsilon_of(const std::vector<i128>& items, const MixerLimits& limits = {});

struct LayerChoice {
    uint32_t k = 0;
    uint64_t layer_count = 0;  // distinct sums among the k-subsets
};

// Densest middle layer: k in [1, floor(|A|/2)] maximizing the distinct
// k-subset sums, ties to the smaller k. Singletons report k = 1.
LayerChoice best_layer(const std::vector<i128>& items, const MixerLimits& limits = {});

struct MixerSample {
    std::vector<uint32_t> left, middle, right;  // disjoint item indices
    double eps_left = 0, eps_middle = 0, eps_right = 0;
};

// Draws three disjoint uniform blocks of floor(beta*n) items and permutes the
// roles so the strongest mixer (smallest eps) sits in the middle.
MixerSample sample_mixers(const SubsetSumInstance& inst, double beta, RandomSource& rng,
                          const MixerLimits& limits = {});

}  // namespace sslab
