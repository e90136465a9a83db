#include "gapped/lce.hpp"

#include <stdexcept>

#include "gapped/suffix_array.hpp"

namespace gapped {

LceOracle::LceOracle(const Word& w) : n_(w.size()) {
    const auto& l = w.letters();
    text_.reserve(static_cast<std::size_t>(2 * n_ + 1));
    text_.insert(text_.end(), l.begin(), l.end());
    text_.push_back(0);
    text_.insert(text_.end(), l.rbegin(), l.rend());
    sa_ = gapped::suffix_array(text_, w.alphabet_size());
    rank_ = inverse_permutation(sa_);
    lcp_ = lcp_array(text_, sa_, rank_);
    rmq_ = RangeMin(lcp_);
}

namespace {
void check_pos(std::int64_t i, std::int64_t n, const char* what) {
    if (i < 1 || i > n) throw std::out_of_range(std::string(what) + ": position out of range");
}
}  // namespace

std::int64_t LceOracle::lce(std::int64_t i, std::int64_t j) const {
    check_pos(i, n_, "lce");
    check_pos(j, n_, "lce");
    if (i == j) return n_ - i + 1;
    return lce_u(i, j);
}

std::int64_t LceOracle::lcs(std::int64_t i, std::int64_t j) const {
    check_pos(i, n_, "lcs");
    check_pos(j, n_, "lcs");
    if (i == j) return i;
    return lcs_u(i, j);
}

std::int64_t LceOracle::palindromic_extension(std::int64_t e, std::int64_t b_right) const {
    check_pos(e, n_, "palindromic_extension");
    check_pos(b_right, n_, "palindromic_extension");
    if (e >= b_right) throw std::out_of_range("palindromic_extension: need e < bRight");
    return palext_u(e, b_right);
}

std::int64_t LceOracle::longest_periodic_extension(std::int64_t i, std::int64_t p) const {
    check_pos(i, n_, "longest_periodic_extension");
    if (p < 1) throw std::out_of_range("longest_periodic_extension: period must be positive");
    return lpe_u(i, p);
}

}  // namespace gapped
