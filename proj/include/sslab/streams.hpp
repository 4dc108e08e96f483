#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "sslab/instance.hpp"
#include "sslab/int128.hpp"

namespace sslab {

enum class StreamOrder { increasing, decreasing };

struct SumPair {
    i128 sum = 0;
    uint32_t left = 0;   // index into the left input as passed by the caller
    uint32_t right = 0;  // index into the right input
};

// Emits all |left|*|right| pairwise sums in sorted order without
// materializing them: a cursor per row, rows seeded lazily, so the live
// frontier never exceeds min(|left|,|right|). Ties are emitted in
// (left, right) lexicographic order for both directions.
class SortedSumStream {
public:
    SortedSumStream(std::vector<i128> left, std::vector<i128> right, StreamOrder order);

    const SumPair* peek();
    std::optional<SumPair> pop();

    uint64_t emitted() const { return emitted_; }
    uint64_t total() const { return total_; }
    size_t frontier_size() const { return heap_.size(); }
    size_t peak_frontier() const { return peak_frontier_; }

private:
    struct Node {
        i128 sum;
        uint32_t row_pos, col_pos;  // positions in the sorted internal tables
        uint32_t oleft, oright;     // caller-facing indices
    };
    struct Later {
        bool operator()(const Node& a, const Node& b) const {
            if (a.sum != b.sum) return a.sum > b.sum;
            if (a.oleft != b.oleft) return a.oleft > b.oleft;
            return a.oright > b.oright;
        }
    };

    void seed_next_row();
    void push_node(uint32_t row_pos, uint32_t col_pos);

    std::vector<std::pair<i128, uint32_t>> rows_, cols_;  // (value, original index)
    bool swapped_ = false;  // rows built from the right input
    bool negated_ = false;  // decreasing order runs the engine on negated values
    std::priority_queue<Node, std::vector<Node>, Later> heap_;
    size_t next_row_ = 0;
    uint64_t emitted_ = 0, total_ = 0;
    size_t peak_frontier_ = 0;
    SumPair current_{};
    bool current_valid_ = false;
};

// Two-pointer scan over ascending arrays; nullopt when no pair hits t.
// Ambiguity resolved like the streams: the left cursor starts at the top.
std::optional<std::pair<size_t, size_t>> two_sum(const std::vector<i128>& a,
                                                 const std::vector<i128>& b, i128 t);

struct SolveStats {
    uint64_t peak_entries = 0;  // materialized table entries plus live frontiers
    uint64_t stream_pops = 0;
    uint64_t table_entries = 0;
};

// Classic meet-in-the-middle: two half-tables of 2^(n/2) subset sums.
std::optional<SolutionCertificate> horowitz_sahni(const SubsetSumInstance& inst,
                                                  SolveStats* stats = nullptr);

// Four quarter-tables driven through two opposing sum streams; the tables
// hold 2^(n/4) entries each and the frontiers stay within the same budget.
std::optional<SolutionCertificate> schroeppel_shamir(const SubsetSumInstance& inst,
                                                     SolveStats* stats = nullptr);

// One index per array summing to the target, ignoring sentinel padding.
std::optional<std::array<uint32_t, 4>> four_sum(const KSumInstance& inst,
                                                SolveStats* stats = nullptr);

}  // namespace sslab
