#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gapped/core.hpp"
#include "gapped/range_min.hpp"

namespace gapped {

// Suffix structures over T = w . 0 . reverse(w), |T| = 2n + 1.
// T position (0-based) of w[i] is i - 1; of the mirror of w[i] is 2n + 1 - i.
class LceOracle {
public:
    LceOracle() = default;
    explicit LceOracle(const Word& w);

    std::int64_t n() const { return n_; }
    const std::vector<std::int32_t>& text() const { return text_; }
    const std::vector<std::int32_t>& suffix_array() const { return sa_; }
    const std::vector<std::int32_t>& inverse_sa() const { return rank_; }
    const std::vector<std::int32_t>& lcp() const { return lcp_; }

    // Checked, 1-based.
    std::int64_t lce(std::int64_t i, std::int64_t j) const;
    std::int64_t lcs(std::int64_t i, std::int64_t j) const;
    std::int64_t palindromic_extension(std::int64_t e, std::int64_t b_right) const;
    std::int64_t longest_periodic_extension(std::int64_t i, std::int64_t p) const;

    // Unchecked variants for hot paths.
    std::int64_t lce_text(std::int64_t a, std::int64_t b) const {
        if (a == b) return static_cast<std::int64_t>(text_.size()) - a;
        std::int64_t ra = rank_[a], rb = rank_[b];
        if (ra > rb) std::swap(ra, rb);
        return rmq_.query(static_cast<std::size_t>(ra + 1), static_cast<std::size_t>(rb));
    }
    std::int64_t mirror(std::int64_t i) const { return 2 * n_ + 1 - i; }
    std::int64_t lce_u(std::int64_t i, std::int64_t j) const { return i == j ? n_ - i + 1 : lce_text(i - 1, j - 1); }
    // 0 when either index is 0.
    std::int64_t lcs_u(std::int64_t i, std::int64_t j) const {
        return (i == 0 || j == 0) ? 0 : lce_text(mirror(i), mirror(j));
    }
    // w[e - t] = w[b + t]; 0 when e == 0 or b > n.
    std::int64_t palext_u(std::int64_t e, std::int64_t b) const {
        return (e == 0 || b > n_) ? 0 : lce_text(mirror(e), b - 1);
    }
    // w[i + t] = w[j - t]; 0 when i > n or j == 0.
    std::int64_t inward_u(std::int64_t i, std::int64_t j) const {
        return (i > n_ || j == 0) ? 0 : lce_text(i - 1, mirror(j));
    }
    std::int64_t lpe_u(std::int64_t i, std::int64_t p) const {
        if (i + p > n_) return n_;
        return std::min(n_, i + p - 1 + lce_u(i, i + p));
    }
    // Start of the longest p-periodic factor ending at e.
    std::int64_t lpe_back_u(std::int64_t e, std::int64_t p) const {
        if (e - p < 1) return 1;
        return std::max<std::int64_t>(1, e - p + 1 - lcs_u(e, e - p));
    }

private:
    std::int64_t n_ = 0;
    std::vector<std::int32_t> text_;
    std::vector<std::int32_t> sa_;
    std::vector<std::int32_t> rank_;
    std::vector<std::int32_t> lcp_;
    RangeMin rmq_;
};

}  // namespace gapped
