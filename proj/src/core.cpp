#include "gapped/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gapped {

namespace {

using i128 = __int128;

template <class T>
void rank_compress(const std::vector<T>& raw, std::vector<std::int32_t>& out, std::int32_t& sigma) {
    std::vector<T> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        out[i] = static_cast<std::int32_t>(std::lower_bound(sorted.begin(), sorted.end(), raw[i]) - sorted.begin()) + 1;
    }
    sigma = static_cast<std::int32_t>(sorted.size());
}

std::string decimal_or_fraction(std::int64_t num, std::int64_t den) {
    if (den == 1) return std::to_string(num);
    std::int64_t d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    int digits = std::max(twos, fives);
    if (d != 1 || digits > 12) return std::to_string(num) + "/" + std::to_string(den);
    i128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    i128 scaled = static_cast<i128>(num) * (scale / den);
    i128 whole = scaled / scale;
    i128 frac = scaled % scale;
    std::string f;
    for (int i = 0; i < digits; ++i) {
        f.insert(f.begin(), static_cast<char>('0' + static_cast<int>(frac % 10)));
        frac /= 10;
    }
    while (!f.empty() && f.back() == '0') f.pop_back();
    std::string s = std::to_string(static_cast<std::int64_t>(whole));
    if (!f.empty()) s += "." + f;
    return s;
}

std::int64_t parse_uint(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("alpha: empty number");
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v < 0 || s.front() == '-' || s.front() == '+') {
        throw std::invalid_argument("alpha: bad number '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

Word Word::from_bytes(std::string_view bytes) {
    Word w;
    std::vector<unsigned char> raw(bytes.begin(), bytes.end());
    rank_compress(raw, w.letters_, w.sigma_);
    return w;
}

Word Word::from_ints(std::span<const std::int64_t> values) {
    Word w;
    rank_compress(std::vector<std::int64_t>(values.begin(), values.end()), w.letters_, w.sigma_);
    return w;
}

std::int32_t Word::at(std::int64_t pos) const {
    if (pos < 1 || pos > size()) throw std::out_of_range("Word::at: position out of range");
    return (*this)[pos];
}

Word Word::reversed() const {
    Word w = *this;
    std::reverse(w.letters_.begin(), w.letters_.end());
    return w;
}

Word Word::factor(std::int64_t from, std::int64_t to) const {
    if (from < 1 || to > size() || from > to + 1) throw std::out_of_range("Word::factor: bad interval");
    std::vector<std::int64_t> v(letters_.begin() + (from - 1), letters_.begin() + to);
    return from_ints(v);
}

Fraction::Fraction(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Fraction: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    i128 l = static_cast<i128>(a.num) * b.den;
    i128 r = static_cast<i128>(b.num) * a.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Fraction::to_string() const { return decimal_or_fraction(num, den); }

Alpha::Alpha(std::int64_t num, std::int64_t den) {
    if (num <= 0 || den <= 0) throw std::invalid_argument("alpha must be positive");
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    if (num_ < den_) throw std::invalid_argument("alpha must be at least 1");
}

Alpha Alpha::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Alpha(parse_uint(text.substr(0, slash)), parse_uint(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Alpha(parse_uint(text), 1);
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() && whole.empty()) throw std::invalid_argument("alpha: bad number");
    if (frac.size() > 15) throw std::invalid_argument("alpha: too many decimal digits");
    std::int64_t w = whole.empty() ? 0 : parse_uint(whole);
    std::int64_t f = frac.empty() ? 0 : parse_uint(frac);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    if (w > (INT64_MAX - f) / den) throw std::invalid_argument("alpha: out of range");
    return Alpha(w * den + f, den);
}

std::int64_t Alpha::floor_times(std::int64_t x) const {
    return static_cast<std::int64_t>(static_cast<i128>(num_) * x / den_);
}

bool Alpha::admits(std::int64_t period, std::int64_t arm) const {
    return static_cast<i128>(period) * den_ <= static_cast<i128>(num_) * arm;
}

std::string Alpha::to_string() const { return decimal_or_fraction(num_, den_); }

namespace {

void check_gamma(const Fraction& g) {
    if (g.num <= 0 || g.num > g.den) throw std::invalid_argument("gamma must lie in (0, 1]");
}

// Integer range [ceil(v - gamma*y), v].
std::pair<i128, i128> lattice_range(std::int64_t v, std::int64_t y, const Fraction& g) {
    i128 top = static_cast<i128>(v) * g.den - static_cast<i128>(g.num) * y;
    i128 lo = top / g.den;
    if (top % g.den != 0 && top > 0) ++lo;
    return {lo, v};
}

}  // namespace

bool gamma_covers(const Point& p, const Point& q, const Fraction& gamma) {
    check_gamma(gamma);
    auto [xlo, xhi] = lattice_range(p.x, p.y, gamma);
    auto [ylo, yhi] = lattice_range(p.y, p.y, gamma);
    return xlo <= q.x && q.x <= xhi && ylo <= q.y && q.y <= yhi;
}

bool covers_common_point(const Point& p, const Point& q, const Fraction& gamma) {
    check_gamma(gamma);
    auto [pxl, pxh] = lattice_range(p.x, p.y, gamma);
    auto [pyl, pyh] = lattice_range(p.y, p.y, gamma);
    auto [qxl, qxh] = lattice_range(q.x, q.y, gamma);
    auto [qyl, qyh] = lattice_range(q.y, q.y, gamma);
    return std::max(pxl, qxl) <= std::min(pxh, qxh) && std::max(pyl, qyl) <= std::min(pyh, qyh);
}

bool check_maximal_repeat(const Word& w, const GappedRepeat& r) {
    const std::int64_t n = w.size();
    if (r.b_left < 1 || r.arm < 1 || r.period < r.arm || r.e_right() > n) {
        throw std::out_of_range("repeat does not fit the word");
    }
    for (std::int64_t i = 0; i < r.arm; ++i) {
        if (w[r.b_left + i] != w[r.b_right() + i]) return false;
    }
    if (r.b_left > 1 && w[r.b_left - 1] == w[r.b_right() - 1]) return false;
    if (r.e_right() < n && w[r.e_left() + 1] == w[r.e_right() + 1]) return false;
    return true;
}

bool check_maximal_palindrome(const Word& w, const GappedPalindrome& p) {
    const std::int64_t n = w.size();
    if (p.b_left < 1 || p.arm < 1 || p.gap_len < 0 || p.e_right() > n) {
        throw std::out_of_range("palindrome does not fit the word");
    }
    for (std::int64_t i = 0; i < p.arm; ++i) {
        if (w[p.b_left + i] != w[p.e_right() - i]) return false;
    }
    if (p.b_left > 1 && p.e_right() < n && w[p.b_left - 1] == w[p.e_right() + 1]) return false;
    if (p.gap_len > 1 && w[p.e_left() + 1] == w[p.b_right() - 1]) return false;
    return true;
}

}  // namespace gapped
