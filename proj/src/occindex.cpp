#include "gapped/occindex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gapped/suffix_array.hpp"

namespace gapped {

std::vector<std::int64_t> OccurrenceSet::decode() const {
    std::vector<std::int64_t> out(singles.begin(), singles.end());
    for (const auto& g : groups) {
        for (std::int64_t i = 0; i < g.count; ++i) out.push_back(g.first + i * g.step);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BasicFactorDictionary::BasicFactorDictionary(const Word& w) : n_(w.size()) {
    if (n_ == 0) return;
    const auto& s = w.letters();
    sa_ = gapped::suffix_array(s, w.alphabet_size());
    const auto rank = inverse_permutation(sa_);
    const auto lcp = lcp_array(s, sa_, rank);
    const int top = floor_log2(static_cast<std::uint64_t>(n_));
    levels_.resize(static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top; ++k) {
        const std::int64_t len = std::int64_t{1} << k;
        Level& lv = levels_[k];
        lv.ids.assign(static_cast<std::size_t>(n_), -1);
        std::int32_t next = 0;
        for (std::int64_t r = 0; r < n_; ++r) {
            const std::int64_t pos = sa_[r];
            if (n_ - pos < len) continue;
            if (r == 0 || lcp[r] < len) ++next;
            lv.ids[pos] = next - 1;
        }
        lv.offset.assign(static_cast<std::size_t>(next) + 1, 0);
        for (std::int32_t id : lv.ids) {
            if (id >= 0) ++lv.offset[id + 1];
        }
        for (std::size_t i = 1; i < lv.offset.size(); ++i) lv.offset[i] += lv.offset[i - 1];
        lv.positions.resize(static_cast<std::size_t>(lv.offset.back()));
        std::vector<std::int32_t> fill(lv.offset.begin(), lv.offset.end() - 1);
        for (std::int64_t pos = 0; pos < n_; ++pos) {
            const std::int32_t id = lv.ids[pos];
            if (id >= 0) lv.positions[fill[id]++] = static_cast<std::int32_t>(pos + 1);
        }
    }
}

std::span<const std::int32_t> BasicFactorDictionary::occurrences(int k, std::int32_t id) const {
    const Level& lv = levels_[k];
    return {lv.positions.data() + lv.offset[id], lv.positions.data() + lv.offset[id + 1]};
}

void BasicFactorDictionary::occurrences_in_span(const LceOracle& o, std::int64_t i, int k, std::int64_t from,
                                                std::int64_t to, OccurrenceSet& out) const {
    out.clear();
    const std::int64_t len = std::int64_t{1} << k;
    const std::int32_t key = id(k, i);
    auto occ = occurrences(k, key);
    from = std::max<std::int64_t>(from, 1);
    to = std::min(to, n_ - len + 1);
    if (from > to) return;
    auto it = std::lower_bound(occ.begin(), occ.end(), from);
    const auto stop = std::upper_bound(it, occ.end(), to);
    while (it != stop) {
        const std::int64_t pos = *it;
        if (it + 1 != stop && *(it + 1) - pos <= len) {
            const std::int64_t d = *(it + 1) - pos;
            const std::int64_t end = o.lpe_u(pos, d);
            const std::int64_t t = std::min((end - pos + 1 - len) / d + 1, (to - pos) / d + 1);
            out.groups.push_back({pos, d, t});
            it += t;
        } else {
            out.singles.push_back(pos);
            ++it;
        }
    }
}

OccurrenceSet BasicFactorDictionary::occurrences_in_span(const LceOracle& o, std::int64_t i, int k, std::int64_t from,
                                                         std::int64_t to) const {
    if (k < 0 || k >= levels() || i < 1 || i + (std::int64_t{1} << k) - 1 > n_) {
        throw std::out_of_range("occurrences_in_span: factor out of range");
    }
    OccurrenceSet out;
    occurrences_in_span(o, i, k, from, to, out);
    return out;
}

OccurrenceSet BasicFactorDictionary::occurrences_in_range(const LceOracle& o, std::int64_t i, int k, std::int64_t j,
                                                          std::int64_t c) const {
    if (c < 2) throw std::invalid_argument("occurrences_in_range: c must be at least 2");
    if (j < 1 || j > n_) throw std::out_of_range("occurrences_in_range: range start out of range");
    const std::int64_t to = std::min(n_, j + c * (std::int64_t{1} << k) - 1);
    return occurrences_in_span(o, i, k, j, to);
}

WindowBitsetIndex WindowBitsetIndex::make(const Word& w, std::int64_t from, std::int64_t beta, std::int64_t log_n,
                                          bool mirrored, std::int64_t zone_blocks) {
    if (beta < 16) throw std::invalid_argument("window index: beta must be at least 16");
    if (zone_blocks < 1 || zone_blocks > beta) throw std::invalid_argument("window index: zone larger than window");
    if (from < 1 || from > w.size()) throw std::out_of_range("window index: start out of range");
    WindowBitsetIndex idx;
    const std::int64_t to = std::min(w.size(), from + beta * log_n - 1);
    idx.build(w, from, to, from + (beta - zone_blocks) * log_n, mirrored);
    return idx;
}

void WindowBitsetIndex::build(const Word& w, std::int64_t from, std::int64_t to, std::int64_t zone_from,
                              bool mirrored) {
    from_ = from;
    to_ = to;
    zone_from_ = zone_from;
    mirrored_ = mirrored;
    width_ = to - from + 1;
    const std::int64_t W = width_;
    words_ = static_cast<std::size_t>((W + 63) / 64);

    // Letters renumbered by first appearance so bucket arrays stay window-sized.
    text_.clear();
    const std::int64_t tlen = mirrored ? 2 * W + 1 : W;
    text_.reserve(static_cast<std::size_t>(tlen));
    if (remap_.size() < static_cast<std::size_t>(w.alphabet_size()) + 1) remap_.assign(w.alphabet_size() + 1, 0);
    std::int32_t next = 0;
    for (std::int64_t i = from; i <= to; ++i) {
        std::int32_t& id = remap_[w[i]];
        if (id == 0) id = ++next;
        text_.push_back(id);
    }
    for (std::int64_t i = from; i <= to; ++i) remap_[w[i]] = 0;
    if (mirrored) {
        text_.push_back(0);
        for (std::int64_t i = W - 1; i >= 0; --i) text_.push_back(text_[i]);
    }

    sa_ = suffix_array(text_, next);
    rank_ = inverse_permutation(sa_);
    lcp_ = lcp_array(text_, sa_, rank_);

    // LCP-interval tree, nodes numbered in push order; root is 0.
    const std::int64_t N = tlen;
    node_lcp_.clear();
    leaf_parent_.assign(static_cast<std::size_t>(N), 0);
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> order;  // pop order, children before parents
    std::vector<std::int32_t> stack;
    node_lcp_.push_back(0);
    parent.push_back(0);
    stack.push_back(0);
    for (std::int64_t i = 1; i <= N; ++i) {
        const std::int32_t h = i < N ? lcp_[i] : 0;
        const bool leaf_done = h <= node_lcp_[stack.back()];
        if (leaf_done) leaf_parent_[i - 1] = stack.back();
        std::int32_t last = -1;
        while (h < node_lcp_[stack.back()]) {
            last = stack.back();
            stack.pop_back();
            order.push_back(last);
            if (h <= node_lcp_[stack.back()]) {
                parent[last] = stack.back();
                last = -1;
            }
        }
        if (h > node_lcp_[stack.back()]) {
            const auto id = static_cast<std::int32_t>(node_lcp_.size());
            node_lcp_.push_back(h);
            parent.push_back(stack.back());
            if (last >= 0) parent[last] = id;
            if (!leaf_done) leaf_parent_[i - 1] = id;
            stack.push_back(id);
        }
    }
    const std::size_t nodes = node_lcp_.size();

    bits_.assign(nodes * words_, 0);
    for (std::int64_t r = 0; r < N; ++r) {
        const std::int64_t p = sa_[r];
        if (p < W) bits_[leaf_parent_[r] * words_ + static_cast<std::size_t>(p >> 6)] |= std::uint64_t{1} << (p & 63);
    }
    for (std::int32_t x : order) {
        std::uint64_t* dst = bits_.data() + parent[x] * words_;
        const std::uint64_t* src = bits_.data() + x * words_;
        for (std::size_t k = 0; k < words_; ++k) dst[k] |= src[k];
    }

    const int depth_bits = std::max(1, static_cast<int>(std::bit_width(nodes)));
    up_.resize(static_cast<std::size_t>(depth_bits));
    up_[0] = parent;
    for (int j = 1; j < depth_bits; ++j) {
        up_[j].resize(nodes);
        for (std::size_t x = 0; x < nodes; ++x) up_[j][x] = up_[j - 1][up_[j - 1][x]];
    }
}

bool WindowBitsetIndex::admissible(std::int64_t pos, std::int64_t len) const {
    return len >= 1 && std::has_single_bit(static_cast<std::uint64_t>(len)) && pos >= zone_from_ && pos >= from_ &&
           (pos - from_) % len == 0 && pos + len - 1 <= to_;
}

std::int32_t WindowBitsetIndex::locate(std::int64_t pos, std::int64_t len, bool reversed, std::int32_t& leaf) const {
    const std::int64_t u = pos - from_;
    const std::int64_t start = reversed ? 2 * width_ - (u + len - 1) : u;
    leaf = rank_[start];
    std::int32_t node = leaf_parent_[leaf];
    if (node_lcp_[node] < len) return -1;
    for (int j = static_cast<int>(up_.size()) - 1; j >= 0; --j) {
        const std::int32_t a = up_[j][node];
        if (node_lcp_[a] >= len) node = a;
    }
    return node;
}

std::vector<std::int64_t> WindowBitsetIndex::occurrences(std::int64_t pos, std::int64_t len, bool reversed) const {
    if (!admissible(pos, len)) throw std::invalid_argument("window index: key not admissible");
    if (reversed && !mirrored_) throw std::invalid_argument("window index: reversed key needs a mirrored index");
    std::vector<std::int64_t> out;
    std::int32_t leaf = 0;
    const std::int32_t node = locate(pos, len, reversed, leaf);
    if (node < 0) {
        if (sa_[leaf] < width_) out.push_back(from_ + sa_[leaf]);
        return out;
    }
    for (std::int64_t b = next_bit(node, 0, width_); b < width_; b = next_bit(node, b + 1, width_)) {
        out.push_back(from_ + b);
    }
    return out;
}

std::int64_t WindowBitsetIndex::next_bit(std::int32_t node, std::int64_t from_bit, std::int64_t limit) const {
    if (from_bit >= limit) return limit;
    const std::uint64_t* b = bits_.data() + static_cast<std::size_t>(node) * words_;
    std::size_t k = static_cast<std::size_t>(from_bit >> 6);
    std::uint64_t cur = b[k] & (~std::uint64_t{0} << (from_bit & 63));
    const std::size_t last = static_cast<std::size_t>((limit - 1) >> 6);
    while (true) {
        if (cur) {
            const std::int64_t r = static_cast<std::int64_t>(k * 64 + std::countr_zero(cur));
            return r < limit ? r : limit;
        }
        if (++k > last) return limit;
        cur = b[k];
    }
}

void WindowBitsetIndex::select(const LceOracle& o, std::int64_t pos, std::int64_t len, std::int64_t zlo,
                               std::int64_t zhi, bool reversed, OccurrenceSet& out) const {
    out.clear();
    zlo = std::max(zlo, from_);
    zhi = std::min(zhi, to_ - len + 1);
    if (zlo > zhi) return;
    std::int32_t leaf = 0;
    const std::int32_t node = locate(pos, len, reversed, leaf);
    if (node < 0) {
        const std::int64_t p = from_ + sa_[leaf];
        if (sa_[leaf] < width_ && p >= zlo && p <= zhi) out.singles.push_back(p);
        return;
    }
    const std::int64_t limit = zhi - from_ + 1;
    std::int64_t b = next_bit(node, zlo - from_, limit);
    while (b < limit) {
        const std::int64_t nb = next_bit(node, b + 1, limit);
        const std::int64_t p = from_ + b;
        if (nb < limit && nb - b <= len) {
            const std::int64_t d = nb - b;
            const std::int64_t end = o.lpe_u(p, d);
            const std::int64_t t = std::min((end - p + 1 - len) / d + 1, (zhi - p) / d + 1);
            out.groups.push_back({p, d, t});
            b = next_bit(node, b + (t - 1) * d + 1, limit);
        } else {
            out.singles.push_back(p);
            b = nb;
        }
    }
}

OccurrenceSet WindowBitsetIndex::select(const LceOracle& o, std::int64_t pos, std::int64_t len, std::int64_t zlo,
                                        std::int64_t zhi, bool reversed) const {
    if (!admissible(pos, len)) throw std::invalid_argument("window index: key not admissible");
    if (reversed && !mirrored_) throw std::invalid_argument("window index: reversed key needs a mirrored index");
    OccurrenceSet out;
    select(o, pos, len, zlo, zhi, reversed, out);
    return out;
}

}  // namespace gapped
