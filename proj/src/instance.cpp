#include "sslab/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace sslab {

bool verify_certificate(const SubsetSumInstance& inst, const SolutionCertificate& cert) {
    uint32_t prev = 0;
    bool first = true;
    i128 sum = 0;
    for (uint32_t idx : cert.indices) {
        if (idx >= inst.items.size()) return false;
        if (!first && idx <= prev) return false;  // enforces sorted + distinct
        prev = idx;
        first = false;
        sum += inst.items[idx];
    }
    return sum == inst.target;
}

i128 certificate_sum(const SubsetSumInstance& inst, const SolutionCertificate& cert) {
    i128 sum = 0;
    for (uint32_t idx : cert.indices) sum += inst.items.at(idx);
    return sum;
}

GeneratedInstance generate_instance(const GenerateOptions& opt, RandomSource& rng) {
    if (opt.solution_size && *opt.solution_size > opt.n)
        throw std::invalid_argument("generate_instance: solution_size exceeds n");
    // Keep n-item sums inside i128 with headroom for the solver arithmetic.
    uint32_t bits_for_n = 1;
    while ((1u << bits_for_n) < opt.n + 1) ++bits_for_n;
    if (opt.weight_bits + bits_for_n > 120)
        throw std::invalid_argument("generate_instance: weight_bits too large for this n");
    u128 magnitude = (u128(1) << opt.weight_bits) - 1;

    GeneratedInstance out;
    out.instance.items.resize(opt.n);
    for (auto& w : out.instance.items) w = rng.signed_magnitude(magnitude);
    if (opt.solution_size) {
        SolutionCertificate cert;
        cert.indices = rng.sample_indices(opt.n, *opt.solution_size);
        out.instance.target = certificate_sum(out.instance, cert);
        out.planted = std::move(cert);
    } else {
        out.instance.target = rng.signed_magnitude(magnitude);
    }
    return out;
}

namespace {

struct I128Hash {
    size_t operator()(i128 v) const {
        u128 x = u128(v);
        uint64_t lo = uint64_t(x), hi = uint64_t(x >> 64);
        uint64_t h = lo ^ (hi * 0x9e3779b97f4a7c15ULL);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return size_t(h);
    }
};

OracleResult oracle_meet_in_middle(const SubsetSumInstance& inst) {
    const size_t n = inst.n();
    const size_t nl = n / 2;
    const size_t nr = n - nl;
    std::unordered_map<i128, uint64_t, I128Hash> left;
    left.reserve(size_t(1) << nl);
    for (uint64_t mask = 0; mask < (uint64_t(1) << nl); ++mask) {
        i128 s = 0;
        for (size_t i = 0; i < nl; ++i)
            if (mask >> i & 1) s += inst.items[i];
        left.emplace(s, mask);  // first mask per sum wins; any witness is fine
    }
    OracleResult res;
    for (uint64_t mask = 0; mask < (uint64_t(1) << nr); ++mask) {
        i128 s = 0;
        for (size_t i = 0; i < nr; ++i)
            if (mask >> i & 1) s += inst.items[nl + i];
        auto it = left.find(inst.target - s);
        if (it == left.end()) continue;
        SolutionCertificate cert;
        for (size_t i = 0; i < nl; ++i)
            if (it->second >> i & 1) cert.indices.push_back(uint32_t(i));
        for (size_t i = 0; i < nr; ++i)
            if (mask >> i & 1) cert.indices.push_back(uint32_t(nl + i));
        res.status = OracleStatus::found;
        res.certificate = std::move(cert);
        return res;
    }
    res.status = OracleStatus::not_found;
    return res;
}

OracleResult oracle_table_dp(const SubsetSumInstance& inst, uint64_t mass) {
    // Offset all reachable sums into [0, mass]; setter[s] is the item that
    // first switched s on, enabling backtracking without per-item tables.
    i128 lo = 0, hi = 0;
    for (i128 w : inst.items) (w < 0 ? lo : hi) += w;
    if (inst.target < lo || inst.target > hi) {
        if (inst.target == 0) {
            return {OracleStatus::found, SolutionCertificate{}};
        }
        return {OracleStatus::not_found, std::nullopt};
    }
    const size_t width = size_t(mass) + 1;
    std::vector<int32_t> setter(width, -2);  // -2 unreachable, -1 empty set
    size_t zero = size_t(-lo);
    setter[zero] = -1;
    std::vector<size_t> active{zero};
    std::vector<size_t> added;
    for (size_t i = 0; i < inst.n(); ++i) {
        i128 w = inst.items[i];
        added.clear();
        for (size_t s : active) {
            i128 ns = i128(s) + w;
            size_t idx = size_t(ns);
            if (setter[idx] == -2) {
                setter[idx] = int32_t(i);
                added.push_back(idx);
            }
        }
        active.insert(active.end(), added.begin(), added.end());
    }
    size_t want = size_t(inst.target - lo);
    if (setter[want] == -2) return {OracleStatus::not_found, std::nullopt};
    SolutionCertificate cert;
    size_t cur = want;
    while (setter[cur] != -1) {
        int32_t i = setter[cur];
        cert.indices.push_back(uint32_t(i));
        cur = size_t(i128(cur) - inst.items[i]);
    }
    std::sort(cert.indices.begin(), cert.indices.end());
    return {OracleStatus::found, std::move(cert)};
}

}  // namespace

OracleResult dp_oracle(const SubsetSumInstance& inst, const OracleLimits& limits) {
    if (inst.target == 0) return {OracleStatus::found, SolutionCertificate{}};
    if (inst.n() <= limits.n_cap) return oracle_meet_in_middle(inst);
    u128 mass = 0;
    for (i128 w : inst.items) mass += u128(abs128(w));
    if (mass <= limits.mass_cap) return oracle_table_dp(inst, uint64_t(mass));
    return {OracleStatus::refused, std::nullopt};
}

void KSumInstance::validate() const {
    if (arrays.size() != real_sizes.size())
        throw std::invalid_argument("KSumInstance: real_sizes bookkeeping out of sync");
    size_t len = arrays.empty() ? 0 : arrays.front().size();
    for (size_t j = 0; j < arrays.size(); ++j) {
        if (arrays[j].size() != len) throw std::invalid_argument("KSumInstance: ragged arrays");
        if (real_sizes[j] > len) throw std::invalid_argument("KSumInstance: real size exceeds length");
        for (size_t i = real_sizes[j]; i < len; ++i)
            if (arrays[j][i] != ksum_sentinel)
                throw std::invalid_argument("KSumInstance: padding must hold the sentinel");
    }
}

KSumInstance make_ksum(std::vector<std::vector<i128>> arrays, i128 target) {
    KSumInstance out;
    size_t len = 0;
    for (auto& a : arrays) len = std::max(len, a.size());
    out.real_sizes.reserve(arrays.size());
    for (auto& a : arrays) {
        out.real_sizes.push_back(a.size());
        a.resize(len, ksum_sentinel);
    }
    out.arrays = std::move(arrays);
    out.target = target;
    out.validate();
    return out;
}

GeneratedKSum generate_ksum(const KSumGenerateOptions& opt, RandomSource& rng) {
    if (opt.length == 0) throw std::invalid_argument("generate_ksum: length must be positive");
    if (opt.arity == 0) throw std::invalid_argument("generate_ksum: arity must be positive");
    uint32_t bits = opt.value_bits;
    if (bits == 0) {
        uint32_t lg = 1;
        while ((1u << lg) < opt.length) ++lg;
        bits = std::max(8u, 4 * lg);
    }
    if (bits > 100) throw std::invalid_argument("generate_ksum: value_bits too large");
    u128 magnitude = (u128(1) << bits) - 1;
    std::vector<std::vector<i128>> arrays(opt.arity);
    for (auto& a : arrays) {
        a.resize(opt.length);
        for (auto& v : a) v = rng.signed_magnitude(magnitude);
    }
    GeneratedKSum out;
    i128 target;
    if (opt.plant) {
        std::vector<uint32_t> picks(opt.arity);
        for (auto& p : picks) p = uint32_t(rng.below(opt.length));
        target = 0;
        for (size_t j = 0; j < arrays.size(); ++j) target += arrays[j][picks[j]];
        out.planted = std::move(picks);
    } else {
        // All-positive entries with a negative target: no tuple can match.
        for (auto& a : arrays)
            for (auto& v : a) v = abs128(v) + 1;
        target = -1;
    }
    out.instance = make_ksum(std::move(arrays), target);
    return out;
}

Reduced4Sum reduce_subsetsum_to_4sum(const SubsetSumInstance& inst) {
    const size_t n = inst.n();
    if (n > 80) throw std::invalid_argument("reduce_subsetsum_to_4sum: block enumeration too large");
    Reduced4Sum out;
    std::vector<std::vector<i128>> arrays(4);
    size_t base = 0;
    for (size_t j = 0; j < 4; ++j) {
        size_t size = n / 4 + (j < n % 4 ? 1 : 0);
        arrays[j].reserve(size_t(1) << size);
        out.masks[j].reserve(size_t(1) << size);
        for (uint64_t mask = 0; mask < (uint64_t(1) << size); ++mask) {
            i128 s = 0;
            uint64_t items = 0;
            for (size_t i = 0; i < size; ++i) {
                if (mask >> i & 1) {
                    s += inst.items[base + i];
                    items |= uint64_t(1) << (base + i);
                }
            }
            arrays[j].push_back(s);
            out.masks[j].push_back(items);
        }
        base += size;
    }
    out.ksum = make_ksum(std::move(arrays), inst.target);
    return out;
}

SolutionCertificate certificate_from_masks(const Reduced4Sum& red,
                                           const std::array<uint32_t, 4>& picks) {
    uint64_t items = 0;
    for (size_t j = 0; j < 4; ++j) items |= red.masks[j].at(picks[j]);
    SolutionCertificate cert;
    for (uint32_t i = 0; i < 64; ++i)
        if (items >> i & 1) cert.indices.push_back(i);
    return cert;
}

Reduced4SumFromK reduce_2ksum_to_4sum(const KSumInstance& inst) {
    inst.validate();
    KSumInstance padded = inst;
    while (padded.arrays.size() % 4 != 0) {
        size_t len = padded.arrays.empty() ? 1 : padded.arrays.front().size();
        std::vector<i128> extra(len, ksum_sentinel);
        if (len > 0) extra[0] = 0;
        padded.arrays.push_back(std::move(extra));
        padded.real_sizes.push_back(len > 0 ? 1 : 0);
    }
    const size_t k = padded.arrays.size();
    const size_t group = k / 4;
    Reduced4SumFromK out;
    std::vector<std::vector<i128>> fused(4);
    for (size_t g = 0; g < 4; ++g) {
        for (size_t j = 0; j < group; ++j) out.source_arrays[g].push_back(uint32_t(g * group + j));
        // Cross product of the group's real entries, odometer order.
        std::vector<uint32_t> cursor(group, 0);
        bool live = true;
        for (size_t j = 0; j < group; ++j)
            if (padded.real_sizes[g * group + j] == 0) live = false;
        while (live) {
            i128 s = 0;
            for (size_t j = 0; j < group; ++j) s += padded.arrays[g * group + j][cursor[j]];
            fused[g].push_back(s);
            out.index_tuples[g].push_back(cursor);
            size_t j = group;
            while (j > 0) {
                --j;
                if (++cursor[j] < padded.real_sizes[g * group + j]) break;
                cursor[j] = 0;
                if (j == 0) live = false;
            }
        }
    }
    out.ksum = make_ksum(std::move(fused), padded.target);
    return out;
}

SubsetSumInstance read_instance_text(std::istream& in) {
    size_t n;
    std::string tok;
    if (!(in >> n)) throw std::invalid_argument("instance text: missing item count");
    if (!(in >> tok)) throw std::invalid_argument("instance text: missing target");
    SubsetSumInstance inst;
    inst.target = parse_i128(tok);
    inst.items.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (!(in >> tok)) throw std::invalid_argument("instance text: truncated weight list");
        inst.items.push_back(parse_i128(tok));
    }
    return inst;
}

void write_instance_text(std::ostream& out, const SubsetSumInstance& inst) {
    out << inst.n() << ' ' << to_string(inst.target) << '\n';
    for (size_t i = 0; i < inst.n(); ++i) {
        if (i) out << ' ';
        out << to_string(inst.items[i]);
    }
    out << '\n';
}

namespace {

nlohmann::ordered_json weight_to_json(i128 v) {
    if (v >= i128(INT64_MIN) && v <= i128(INT64_MAX)) return int64_t(v);
    return to_string(v);
}

i128 weight_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return i128(j.get<int64_t>());
    if (j.is_string()) return parse_i128(j.get<std::string>());
    throw std::invalid_argument("instance json: weight must be integer or decimal string");
}

}  // namespace

GeneratedInstance read_instance_json(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    GeneratedInstance out;
    if (!j.contains("items") || !j.contains("target"))
        throw std::invalid_argument("instance json: need items and target");
    for (const auto& w : j.at("items")) out.instance.items.push_back(weight_from_json(w));
    out.instance.target = weight_from_json(j.at("target"));
    if (j.contains("planted_indices") && !j.at("planted_indices").is_null()) {
        SolutionCertificate cert;
        for (const auto& v : j.at("planted_indices")) cert.indices.push_back(v.get<uint32_t>());
        std::sort(cert.indices.begin(), cert.indices.end());
        out.planted = std::move(cert);
    }
    return out;
}

void write_instance_json(std::ostream& out, const GeneratedInstance& gen) {
    nlohmann::ordered_json j;
    auto items = nlohmann::ordered_json::array();
    for (i128 w : gen.instance.items) items.push_back(weight_to_json(w));
    j["items"] = std::move(items);
    j["target"] = weight_to_json(gen.instance.target);
    if (gen.planted) j["planted_indices"] = gen.planted->indices;
    out << j.dump(2) << '\n';
}

GeneratedInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    // Sniff the format: JSON starts with '{'.
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
        in.get();
        c = in.peek();
    }
    if (c == '{') return read_instance_json(in);
    GeneratedInstance out;
    out.instance = read_instance_text(in);
    return out;
}

}  // namespace sslab
