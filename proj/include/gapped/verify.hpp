#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gapped/core.hpp"
#include "gapped/runs.hpp"

namespace gapped {

constexpr std::size_t kOracleLimit = 5000;

// Reference enumerations straight from the definitions, O(n^2). Throw std::length_error past `limit`.
std::vector<GappedRepeat> brute_repeats(const Word& w, const Alpha& alpha, std::int64_t min_gap,
                                        std::size_t limit = kOracleLimit);
std::vector<GappedPalindrome> brute_palindromes(const Word& w, const Alpha& alpha, std::int64_t min_gap,
                                                std::size_t limit = kOracleLimit);

enum class ArmClass { Periodic, Aperiodic };

inline const Fraction kRepeatBeta{2, 3};
inline const Fraction kPalindromeBeta{6, 7};

ArmClass classify(const GappedRepeat& r, const RunIndex& runs, const Fraction& beta = kRepeatBeta);
ArmClass classify(const GappedPalindrome& p, const RunIndex& runs, const Fraction& beta = kPalindromeBeta);

// gamma = (1 - beta) / alpha
Fraction cover_gamma(const Alpha& alpha, const Fraction& beta);

struct CoverCheck {
    bool disjoint = true;
    std::optional<std::pair<Point, Point>> witness;
};

// True iff no two distinct points gamma-cover a common lattice point.
CoverCheck check_cover_disjointness(std::vector<Point> points, const Fraction& gamma);
CoverCheck check_cover_disjointness(const std::vector<GappedRepeat>& items, const Alpha& alpha,
                                    const Fraction& beta = kRepeatBeta);
CoverCheck check_cover_disjointness(const std::vector<GappedPalindrome>& items, const Alpha& alpha,
                                    const Fraction& beta = kPalindromeBeta);

template <class Record>
std::vector<Record> aperiodic_only(const std::vector<Record>& items, const RunIndex& runs, const Fraction& beta) {
    std::vector<Record> out;
    for (const auto& r : items) {
        if (classify(r, runs, beta) == ArmClass::Aperiodic) out.push_back(r);
    }
    return out;
}

struct BoundsReport {
    std::int64_t n = 0;
    Alpha alpha;

    std::size_t repeat_count = 0;
    Rational repeat_bound;  // 18 alpha n
    std::size_t palindrome_count = 0;
    Rational palindrome_bound;  // 28 alpha n + 7 n
    Rational exponent_sum;
    Rational exponent_bound;  // 3 n
    std::size_t run_count = 0;

    std::size_t periodic_repeats = 0, aperiodic_repeats = 0;
    Rational periodic_repeat_bound;   // 2 alpha E / beta
    Rational aperiodic_repeat_bound;  // 3 alpha n / (1 - beta)
    std::size_t periodic_palindromes = 0, aperiodic_palindromes = 0;
    Rational periodic_palindrome_bound;   // 2 (alpha + 1) E / beta
    Rational aperiodic_palindrome_bound;  // 3 alpha n / (1 - beta)

    bool repeats_ok = true, palindromes_ok = true, exponent_ok = true;
    bool periodic_repeats_ok = true, aperiodic_repeats_ok = true;
    bool periodic_palindromes_ok = true, aperiodic_palindromes_ok = true;

    bool all_ok() const {
        return repeats_ok && palindromes_ok && exponent_ok && periodic_repeats_ok && aperiodic_repeats_ok &&
               periodic_palindromes_ok && aperiodic_palindromes_ok;
    }
};

BoundsReport verify_bounds(const Word& w, const Alpha& alpha, const std::vector<GappedRepeat>& repeats,
                           const std::vector<GappedPalindrome>& palindromes, const std::vector<Run>& runs);
// Runs the finders with the given minimum gap.
BoundsReport verify_bounds(const Word& w, const Alpha& alpha, std::int64_t min_gap = 1);

}  // namespace gapped
