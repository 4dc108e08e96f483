#include "sslab/streams.hpp"

#include <algorithm>
#include <stdexcept>

namespace sslab {

SortedSumStream::SortedSumStream(std::vector<i128> left, std::vector<i128> right,
                                 StreamOrder order) {
    negated_ = order == StreamOrder::decreasing;
    total_ = uint64_t(left.size()) * uint64_t(right.size());
    swapped_ = right.size() < left.size();
    const auto& row_src = swapped_ ? right : left;
    const auto& col_src = swapped_ ? left : right;
    rows_.reserve(row_src.size());
    cols_.reserve(col_src.size());
    for (uint32_t i = 0; i < row_src.size(); ++i)
        rows_.emplace_back(negated_ ? -row_src[i] : row_src[i], i);
    for (uint32_t i = 0; i < col_src.size(); ++i)
        cols_.emplace_back(negated_ ? -col_src[i] : col_src[i], i);
    auto by_value_then_index = [](const std::pair<i128, uint32_t>& a,
                                  const std::pair<i128, uint32_t>& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    };
    std::sort(rows_.begin(), rows_.end(), by_value_then_index);
    std::sort(cols_.begin(), cols_.end(), by_value_then_index);
    if (!rows_.empty() && !cols_.empty()) seed_next_row();
}

void SortedSumStream::push_node(uint32_t row_pos, uint32_t col_pos) {
    Node n;
    n.sum = rows_[row_pos].first + cols_[col_pos].first;
    n.row_pos = row_pos;
    n.col_pos = col_pos;
    uint32_t orow = rows_[row_pos].second, ocol = cols_[col_pos].second;
    n.oleft = swapped_ ? ocol : orow;
    n.oright = swapped_ ? orow : ocol;
    heap_.push(n);
    peak_frontier_ = std::max(peak_frontier_, heap_.size());
}

void SortedSumStream::seed_next_row() {
    push_node(uint32_t(next_row_), 0);
    ++next_row_;
}

const SumPair* SortedSumStream::peek() {
    if (current_valid_) return &current_;
    if (heap_.empty()) return nullptr;
    Node top = heap_.top();
    heap_.pop();
    if (top.col_pos + 1 < cols_.size()) push_node(top.row_pos, top.col_pos + 1);
    if (top.col_pos == 0 && next_row_ < rows_.size()) seed_next_row();
    current_.sum = negated_ ? -top.sum : top.sum;
    current_.left = top.oleft;
    current_.right = top.oright;
    current_valid_ = true;
    return &current_;
}

std::optional<SumPair> SortedSumStream::pop() {
    const SumPair* p = peek();
    if (!p) return std::nullopt;
    SumPair out = *p;
    current_valid_ = false;
    ++emitted_;
    return out;
}

std::optional<std::pair<size_t, size_t>> two_sum(const std::vector<i128>& a,
                                                 const std::vector<i128>& b, i128 t) {
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i - 1] > a[i]) throw std::invalid_argument("two_sum: first array not ascending");
    for (size_t i = 1; i < b.size(); ++i)
        if (b[i - 1] > b[i]) throw std::invalid_argument("two_sum: second array not ascending");
    size_t i = a.size(), j = 0;
    while (i > 0 && j < b.size()) {
        i128 s = a[i - 1] + b[j];
        if (s == t) return std::make_pair(i - 1, j);
        if (s > t)
            --i;
        else
            ++j;
    }
    return std::nullopt;
}

namespace {

struct SubsetTable {
    std::vector<i128> sums;
    std::vector<uint64_t> masks;  // bit i set <=> instance item (base + i) taken
};

SubsetTable enumerate_block(const SubsetSumInstance& inst, size_t base, size_t size) {
    SubsetTable t;
    t.sums.reserve(size_t(1) << size);
    t.masks.reserve(size_t(1) << size);
    for (uint64_t mask = 0; mask < (uint64_t(1) << size); ++mask) {
        i128 s = 0;
        uint64_t items = 0;
        for (size_t i = 0; i < size; ++i) {
            if (mask >> i & 1) {
                s += inst.items[base + i];
                items |= uint64_t(1) << (base + i);
            }
        }
        t.sums.push_back(s);
        t.masks.push_back(items);
    }
    return t;
}

SolutionCertificate certificate_from_item_mask(uint64_t items) {
    SolutionCertificate cert;
    for (uint32_t i = 0; i < 64; ++i)
        if (items >> i & 1) cert.indices.push_back(i);
    return cert;
}

}  // namespace

std::optional<SolutionCertificate> horowitz_sahni(const SubsetSumInstance& inst,
                                                  SolveStats* stats) {
    if (inst.n() > 48) throw std::invalid_argument("horowitz_sahni: n too large to enumerate");
    if (inst.target == 0) return SolutionCertificate{};
    size_t nl = inst.n() / 2, nr = inst.n() - nl;
    SubsetTable left = enumerate_block(inst, 0, nl);
    SubsetTable right = enumerate_block(inst, nl, nr);
    if (stats) {
        stats->table_entries = left.sums.size() + right.sums.size();
        stats->peak_entries = std::max(stats->peak_entries, stats->table_entries);
    }
    // Sort both tables by sum, keeping mask order aligned.
    auto order_of = [](const SubsetTable& t) {
        std::vector<uint32_t> ord(t.sums.size());
        for (uint32_t i = 0; i < ord.size(); ++i) ord[i] = i;
        std::sort(ord.begin(), ord.end(),
                  [&](uint32_t a, uint32_t b) { return t.sums[a] < t.sums[b]; });
        return ord;
    };
    auto lo = order_of(left), ro = order_of(right);
    std::vector<i128> ls(lo.size()), rs(ro.size());
    for (size_t i = 0; i < lo.size(); ++i) ls[i] = left.sums[lo[i]];
    for (size_t i = 0; i < ro.size(); ++i) rs[i] = right.sums[ro[i]];
    auto hit = two_sum(ls, rs, inst.target);
    if (!hit) return std::nullopt;
    return certificate_from_item_mask(left.masks[lo[hit->first]] | right.masks[ro[hit->second]]);
}

std::optional<SolutionCertificate> schroeppel_shamir(const SubsetSumInstance& inst,
                                                     SolveStats* stats) {
    if (inst.n() > 48) throw std::invalid_argument("schroeppel_shamir: n too large to enumerate");
    if (inst.target == 0) return SolutionCertificate{};
    std::array<SubsetTable, 4> tables;
    size_t base = 0;
    uint64_t table_total = 0;
    for (size_t j = 0; j < 4; ++j) {
        size_t size = inst.n() / 4 + (j < inst.n() % 4 ? 1 : 0);
        tables[j] = enumerate_block(inst, base, size);
        base += size;
        table_total += tables[j].sums.size();
    }
    SortedSumStream d1(tables[0].sums, tables[1].sums, StreamOrder::increasing);
    SortedSumStream d2(tables[2].sums, tables[3].sums, StreamOrder::decreasing);
    auto record = [&]() {
        if (!stats) return;
        stats->table_entries = table_total;
        stats->stream_pops = d1.emitted() + d2.emitted();
        stats->peak_entries = std::max<uint64_t>(
            stats->peak_entries, table_total + d1.peak_frontier() + d2.peak_frontier());
    };
    const SumPair *a = d1.peek(), *b = d2.peek();
    while (a && b) {
        i128 s = a->sum + b->sum;
        if (s == inst.target) {
            record();
            return certificate_from_item_mask(tables[0].masks[a->left] | tables[1].masks[a->right] |
                                              tables[2].masks[b->left] | tables[3].masks[b->right]);
        }
        if (s < inst.target) {
            d1.pop();
            a = d1.peek();
        } else {
            d2.pop();
            b = d2.peek();
        }
    }
    record();
    return std::nullopt;
}

std::optional<std::array<uint32_t, 4>> four_sum(const KSumInstance& inst, SolveStats* stats) {
    inst.validate();
    if (inst.arity() != 4) throw std::invalid_argument("four_sum: arity must be 4");
    std::array<std::vector<i128>, 4> real;
    for (size_t j = 0; j < 4; ++j)
        real[j].assign(inst.arrays[j].begin(), inst.arrays[j].begin() + inst.real_sizes[j]);
    SortedSumStream d1(real[0], real[1], StreamOrder::increasing);
    SortedSumStream d2(real[2], real[3], StreamOrder::decreasing);
    auto record = [&]() {
        if (!stats) return;
        stats->stream_pops = d1.emitted() + d2.emitted();
        stats->peak_entries =
            std::max<uint64_t>(stats->peak_entries, d1.peak_frontier() + d2.peak_frontier());
    };
    const SumPair *a = d1.peek(), *b = d2.peek();
    while (a && b) {
        i128 s = a->sum + b->sum;
        if (s == inst.target) {
            record();
            return std::array<uint32_t, 4>{a->left, a->right, b->left, b->right};
        }
        if (s < inst.target) {
            d1.pop();
            a = d1.peek();
        } else {
            d2.pop();
            b = d2.peek();
        }
    }
    record();
    return std::nullopt;
}

}  // namespace sslab
