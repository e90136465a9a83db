#include "gapped/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "gapped/finder.hpp"

namespace gapped {

namespace {

void check_limit(const Word& w, std::size_t limit) {
    if (static_cast<std::size_t>(w.size()) > limit) throw std::length_error("word exceeds the oracle size limit");
}

Rational as_rational(const Fraction& f) { return Rational(f.num, f.den); }
Rational as_rational(const Alpha& a) { return Rational(a.num(), a.den()); }

bool periodic_prefix_at_least(std::int64_t lpp, std::int64_t arm, const Fraction& beta) {
    return static_cast<__int128>(lpp) * beta.den >= static_cast<__int128>(beta.num) * arm;
}

}  // namespace

std::vector<GappedRepeat> brute_repeats(const Word& w, const Alpha& alpha, std::int64_t min_gap, std::size_t limit) {
    check_limit(w, limit);
    const std::int64_t n = w.size();
    std::vector<GappedRepeat> out;
    for (std::int64_t q = 1; q < n; ++q) {
        std::int64_t i = 1;
        while (i + q <= n) {
            if (w[i] != w[i + q]) {
                ++i;
                continue;
            }
            const std::int64_t s = i;
            while (i + q <= n && w[i] == w[i + q]) ++i;
            const std::int64_t len = i - s;
            if (q - len >= min_gap && alpha.admits(q, len)) {
                out.push_back({static_cast<std::int32_t>(s), static_cast<std::int32_t>(len),
                               static_cast<std::int32_t>(q)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GappedPalindrome> brute_palindromes(const Word& w, const Alpha& alpha, std::int64_t min_gap,
                                                std::size_t limit) {
    check_limit(w, limit);
    const std::int64_t n = w.size();
    std::vector<GappedPalindrome> out;
    // Pairs (x, c - x) with x < c - x share the center line c; walk each line outward.
    for (std::int64_t c = 3; c <= 2 * n - 1; ++c) {
        std::int64_t x = (c - 1) / 2;
        const std::int64_t x_min = std::max<std::int64_t>(1, c - n);
        while (x >= x_min) {
            if (w[x] != w[c - x]) {
                --x;
                continue;
            }
            const std::int64_t e_left = x;
            while (x >= x_min && w[x] == w[c - x]) --x;
            const std::int64_t arm = e_left - x;
            const std::int64_t gap = c - 2 * e_left - 1;
            if (gap < min_gap || !alpha.admits(arm + gap, arm)) continue;
            if (gap > 1 && w[e_left + 1] == w[e_left + gap]) continue;
            out.push_back({static_cast<std::int32_t>(x + 1), static_cast<std::int32_t>(arm),
                           static_cast<std::int32_t>(gap)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ArmClass classify(const GappedRepeat& r, const RunIndex& runs, const Fraction& beta) {
    const std::int64_t lpp = runs.longest_periodic_prefix_length(r.b_left, r.e_left());
    return periodic_prefix_at_least(lpp, r.arm, beta) ? ArmClass::Periodic : ArmClass::Aperiodic;
}

ArmClass classify(const GappedPalindrome& p, const RunIndex& runs, const Fraction& beta) {
    const std::int64_t lpp = runs.longest_periodic_prefix_length(p.b_left, p.e_left());
    return periodic_prefix_at_least(lpp, p.arm, beta) ? ArmClass::Periodic : ArmClass::Aperiodic;
}

Fraction cover_gamma(const Alpha& alpha, const Fraction& beta) {
    if (beta.num <= 0 || beta.num >= beta.den) throw std::invalid_argument("beta must lie in (0, 1)");
    return Fraction((beta.den - beta.num) * alpha.den(), beta.den * alpha.num());
}

CoverCheck check_cover_disjointness(std::vector<Point> points, const Fraction& gamma) {
    if (gamma.num <= 0 || gamma.num > gamma.den) throw std::invalid_argument("gamma must lie in (0, 1]");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    struct Rect {
        __int128 xl, xh, yl, yh;
    };
    auto lo = [&](std::int64_t v, std::int64_t y) {
        const __int128 top = static_cast<__int128>(v) * gamma.den - static_cast<__int128>(gamma.num) * y;
        __int128 q = top / gamma.den;
        if (top % gamma.den != 0 && top > 0) ++q;
        return q;
    };
    std::vector<Rect> rects;
    rects.reserve(points.size());
    for (const Point& p : points) rects.push_back({lo(p.x, p.y), p.x, lo(p.y, p.y), p.y});

    // Events: (x, kind, id); removals (kind 0) at xh + 1 go before insertions (kind 1).
    std::vector<std::tuple<__int128, int, std::size_t>> events;
    events.reserve(2 * rects.size());
    for (std::size_t i = 0; i < rects.size(); ++i) {
        events.emplace_back(rects[i].xl, 1, i);
        events.emplace_back(rects[i].xh + 1, 0, i);
    }
    std::sort(events.begin(), events.end());

    std::map<__int128, std::size_t> active;  // yl -> id, intervals pairwise disjoint
    CoverCheck res;
    for (const auto& [x, kind, id] : events) {
        const Rect& r = rects[id];
        if (kind == 0) {
            active.erase(r.yl);
            continue;
        }
        auto it = active.lower_bound(r.yl);
        if (it != active.end() && rects[it->second].yl <= r.yh) {
            res.disjoint = false;
            res.witness = std::make_pair(points[it->second], points[id]);
            return res;
        }
        if (it != active.begin()) {
            auto prev = std::prev(it);
            if (rects[prev->second].yh >= r.yl) {
                res.disjoint = false;
                res.witness = std::make_pair(points[prev->second], points[id]);
                return res;
            }
        }
        active.emplace(r.yl, id);
    }
    return res;
}

CoverCheck check_cover_disjointness(const std::vector<GappedRepeat>& items, const Alpha& alpha,
                                    const Fraction& beta) {
    std::vector<Point> pts;
    pts.reserve(items.size());
    for (const auto& r : items) pts.push_back(r.key());
    return check_cover_disjointness(std::move(pts), cover_gamma(alpha, beta));
}

CoverCheck check_cover_disjointness(const std::vector<GappedPalindrome>& items, const Alpha& alpha,
                                    const Fraction& beta) {
    std::vector<Point> pts;
    pts.reserve(items.size());
    for (const auto& p : items) pts.push_back(p.key());
    return check_cover_disjointness(std::move(pts), cover_gamma(alpha, beta));
}

BoundsReport verify_bounds(const Word& w, const Alpha& alpha, const std::vector<GappedRepeat>& repeats,
                           const std::vector<GappedPalindrome>& palindromes, const std::vector<Run>& runs) {
    BoundsReport r;
    r.n = w.size();
    r.alpha = alpha;
    const Rational a = as_rational(alpha);
    const Rational n(r.n);

    r.repeat_count = repeats.size();
    r.repeat_bound = 18 * a * n;
    r.palindrome_count = palindromes.size();
    r.palindrome_bound = 28 * a * n + 7 * n;
    r.exponent_sum = exponent_sum(runs);
    r.exponent_bound = 3 * n;
    r.run_count = run_count(runs);

    const RunIndex index(r.n, runs);
    for (const auto& x : repeats) {
        (classify(x, index, kRepeatBeta) == ArmClass::Periodic ? r.periodic_repeats : r.aperiodic_repeats)++;
    }
    for (const auto& x : palindromes) {
        (classify(x, index, kPalindromeBeta) == ArmClass::Periodic ? r.periodic_palindromes
                                                                    : r.aperiodic_palindromes)++;
    }
    const Rational br = as_rational(kRepeatBeta), bp = as_rational(kPalindromeBeta);
    r.periodic_repeat_bound = 2 * a * r.exponent_sum / br;
    r.aperiodic_repeat_bound = 3 * a * n / (1 - br);
    r.periodic_palindrome_bound = 2 * (a + 1) * r.exponent_sum / bp;
    r.aperiodic_palindrome_bound = 3 * a * n / (1 - bp);

    // Strict bounds hold vacuously on the empty word.
    const bool empty = r.n == 0;
    r.repeats_ok = empty || Rational(r.repeat_count) < r.repeat_bound;
    r.palindromes_ok = empty || Rational(r.palindrome_count) < r.palindrome_bound;
    r.exponent_ok = empty || r.exponent_sum < r.exponent_bound;
    r.periodic_repeats_ok = Rational(r.periodic_repeats) <= r.periodic_repeat_bound;
    r.aperiodic_repeats_ok = empty || Rational(r.aperiodic_repeats) < r.aperiodic_repeat_bound;
    r.periodic_palindromes_ok = Rational(r.periodic_palindromes) <= r.periodic_palindrome_bound;
    r.aperiodic_palindromes_ok = empty || Rational(r.aperiodic_palindromes) < r.aperiodic_palindrome_bound;
    return r;
}

BoundsReport verify_bounds(const Word& w, const Alpha& alpha, std::int64_t min_gap) {
    FinderOptions opts;
    opts.min_gap = min_gap;
    const auto reps = find_all_repeats(w, alpha, opts);
    const auto pals = find_all_palindromes(w, alpha, opts);
    return verify_bounds(w, alpha, reps, pals, compute_runs(w));
}

}  // namespace gapped
