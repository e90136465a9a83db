#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gapped {

// Letters are rank-compressed to [1, sigma]. Positions in the public API are 1-based.
class Word {
public:
    Word() = default;

    static Word from_bytes(std::string_view bytes);
    static Word from_ints(std::span<const std::int64_t> values);
    static Word from_string(std::string_view s) { return from_bytes(s); }

    std::int64_t size() const { return static_cast<std::int64_t>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    // 1-based access.
    std::int32_t operator[](std::int64_t pos) const { return letters_[static_cast<std::size_t>(pos - 1)]; }
    std::int32_t at(std::int64_t pos) const;

    const std::vector<std::int32_t>& letters() const { return letters_; }
    std::int32_t alphabet_size() const { return sigma_; }

    Word reversed() const;
    Word factor(std::int64_t from, std::int64_t to) const;

private:
    std::vector<std::int32_t> letters_;
    std::int32_t sigma_ = 0;
};

// Exact non-negative rational with 64-bit parts, kept in lowest terms.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d);

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);
    std::string to_string() const;
};

// alpha = num / den >= 1.
class Alpha {
public:
    Alpha() = default;
    Alpha(std::int64_t num, std::int64_t den = 1);

    // Accepts "2", "1.5", "3/2".
    static Alpha parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::int64_t ceil() const { return (num_ + den_ - 1) / den_; }
    // floor(alpha * x) for x >= 0
    std::int64_t floor_times(std::int64_t x) const;
    // q <= alpha * l
    bool admits(std::int64_t period, std::int64_t arm) const;
    // alpha < x
    bool less_than(std::int64_t x) const { return num_ < x * den_; }

    Fraction as_fraction() const { return {num_, den_}; }
    std::string to_string() const;

    friend bool operator==(const Alpha&, const Alpha&) = default;

private:
    std::int64_t num_ = 1;
    std::int64_t den_ = 1;
};

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

struct GappedRepeat {
    std::int32_t b_left = 0;
    std::int32_t arm = 0;
    std::int32_t period = 0;

    std::int64_t gap() const { return std::int64_t{period} - arm; }
    std::int64_t e_left() const { return std::int64_t{b_left} + arm - 1; }
    std::int64_t b_right() const { return std::int64_t{b_left} + period; }
    std::int64_t e_right() const { return std::int64_t{b_left} + period + arm - 1; }
    // (eLeft, period) identifies the repeat.
    Point key() const { return {e_left(), period}; }

    friend auto operator<=>(const GappedRepeat&, const GappedRepeat&) = default;
};

struct GappedPalindrome {
    std::int32_t b_left = 0;
    std::int32_t arm = 0;
    std::int32_t gap_len = 0;

    std::int64_t gap() const { return gap_len; }
    std::int64_t e_left() const { return std::int64_t{b_left} + arm - 1; }
    std::int64_t b_right() const { return std::int64_t{b_left} + arm + gap_len; }
    std::int64_t e_right() const { return b_right() + arm - 1; }
    std::int64_t period() const { return std::int64_t{arm} + gap_len; }
    // (eLeft, gap) identifies the palindrome.
    Point key() const { return {e_left(), gap_len}; }

    friend auto operator<=>(const GappedPalindrome&, const GappedPalindrome&) = default;
};

bool gamma_covers(const Point& p, const Point& q, const Fraction& gamma);
bool covers_common_point(const Point& p, const Point& q, const Fraction& gamma);

// Throw std::out_of_range when the record does not fit in w (or its arms overlap).
bool check_maximal_repeat(const Word& w, const GappedRepeat& r);
bool check_maximal_palindrome(const Word& w, const GappedPalindrome& p);

// Integer helpers shared by the modules.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

constexpr int floor_log2(std::uint64_t x) {
    int r = -1;
    while (x) {
        x >>= 1;
        ++r;
    }
    return r;
}

// max(1, floor(log2 n))
constexpr std::int64_t log_block(std::int64_t n) {
    return n < 4 ? 1 : floor_log2(static_cast<std::uint64_t>(n));
}

}  // namespace gapped
