#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sslab/int128.hpp"
#include "sslab/rng.hpp"

namespace sslab {

struct SubsetSumInstance {
    std::vector<i128> items;
    i128 target = 0;

    size_t n() const { return items.size(); }
};

// Sorted, duplicate-free item indices.
struct SolutionCertificate {
    std::vector<uint32_t> indices;

    bool operator==(const SolutionCertificate&) const = default;
};

bool verify_certificate(const SubsetSumInstance& inst, const SolutionCertificate& cert);

i128 certificate_sum(const SubsetSumInstance& inst, const SolutionCertificate& cert);

struct GenerateOptions {
    uint32_t n = 0;
    uint32_t weight_bits = 20;
    // If set, plant a solution of exactly this many items and aim the target at it.
    std::optional<uint32_t> solution_size;
};

struct GeneratedInstance {
    SubsetSumInstance instance;
    std::optional<SolutionCertificate> planted;
};

GeneratedInstance generate_instance(const GenerateOptions& opt, RandomSource& rng);

// Ground-truth decider. Independent mechanics from the production solvers:
// hash-based meet-in-the-middle for small n, mass-bounded table DP otherwise.
enum class OracleStatus { found, not_found, refused };

struct OracleResult {
    OracleStatus status = OracleStatus::refused;
    std::optional<SolutionCertificate> certificate;
};

struct OracleLimits {
    uint32_t n_cap = 30;            // meet-in-the-middle half-enumeration cap
    uint64_t mass_cap = 10000000;   // sum of |w_i| admitted by the table DP
};

OracleResult dp_oracle(const SubsetSumInstance& inst, const OracleLimits& limits = {});

// k sorted-agnostic input arrays of equal length; arrays may be padded with
// `ksum_sentinel` entries, with the pre-padding length kept in real_sizes.
struct KSumInstance {
    std::vector<std::vector<i128>> arrays;
    std::vector<size_t> real_sizes;
    i128 target = 0;

    size_t arity() const { return arrays.size(); }
    void validate() const;  // throws on ragged arrays or bad bookkeeping
};

inline constexpr i128 ksum_sentinel = i128(1) << 122;

KSumInstance make_ksum(std::vector<std::vector<i128>> arrays, i128 target);

struct KSumGenerateOptions {
    uint32_t length = 0;        // entries per array
    uint32_t arity = 4;
    uint32_t value_bits = 0;    // 0: derive ~4*log2(length)
    bool plant = false;
};

struct GeneratedKSum {
    KSumInstance instance;
    std::optional<std::vector<uint32_t>> planted;  // one index per array
};

GeneratedKSum generate_ksum(const KSumGenerateOptions& opt, RandomSource& rng);

// Subset Sum -> 4-SUM: four near-equal index blocks, each array carrying all
// subset sums of its block. masks[j][i] is the item-index bitmask behind
// arrays[j][i], used to translate a 4-SUM hit back into a certificate.
struct Reduced4Sum {
    KSumInstance ksum;
    std::array<std::vector<uint64_t>, 4> masks;
};

Reduced4Sum reduce_subsetsum_to_4sum(const SubsetSumInstance& inst);

SolutionCertificate certificate_from_masks(const Reduced4Sum& red,
                                           const std::array<uint32_t, 4>& picks);

// 2k-SUM -> 4-SUM by fusing groups of k/2 arrays (arity padded to a multiple
// of 4 with singleton zero arrays first). index_tuples maps each fused entry
// back to one index per source array in its group.
struct Reduced4SumFromK {
    KSumInstance ksum;
    std::array<std::vector<std::vector<uint32_t>>, 4> index_tuples;
    std::array<std::vector<uint32_t>, 4> source_arrays;  // which inputs each group fused
};

Reduced4SumFromK reduce_2ksum_to_4sum(const KSumInstance& inst);

// Text format: first line "n t", second line n whitespace-separated weights.
SubsetSumInstance read_instance_text(std::istream& in);
void write_instance_text(std::ostream& out, const SubsetSumInstance& inst);

// JSON format: {"items": [...], "target": ..., "planted_indices": [...]}.
// Values outside int64 are carried as decimal strings.
GeneratedInstance read_instance_json(std::istream& in);
void write_instance_json(std::ostream& out, const GeneratedInstance& gen);

GeneratedInstance load_instance_file(const std::string& path);

}  // namespace sslab
