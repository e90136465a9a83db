#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gapped/core.hpp"
#include "gapped/lce.hpp"

namespace gapped {

struct FinderOptions {
    std::int64_t min_gap = 1;
    unsigned threads = 1;
    // Arms up to short_arm_factor * log n go through the window pipeline. Must be >= 4.
    std::int64_t short_arm_factor = 16;
    // Second long-arm phase over overlapping segments when alpha < log n.
    bool segment_phase = true;
    // Block length override; 0 means max(1, floor(log2 n)).
    std::int64_t log_base = 0;
};

// Where a candidate's right arm is allowed to sit: arm length, right-arm start and end,
// and the interval that must contain the whole repeat.
struct Placement {
    std::int64_t arm_lo = 1, arm_hi = INT64_MAX;
    std::int64_t b_right_lo = 1, b_right_hi = INT64_MAX;
    std::int64_t e_right_lo = 1, e_right_hi = INT64_MAX;
    std::int64_t extent_lo = 1, extent_hi = INT64_MAX;
};

std::vector<GappedRepeat> find_all_repeats(const Word& w, const Alpha& alpha, const FinderOptions& opts = {});
std::vector<GappedPalindrome> find_all_palindromes(const Word& w, const Alpha& alpha, const FinderOptions& opts = {});

// The two halves of the pipeline, split at armLen = short_arm_factor * log n.
std::vector<GappedRepeat> find_short_repeats(const Word& w, const Alpha& alpha, const FinderOptions& opts = {});
std::vector<GappedRepeat> find_long_repeats(const Word& w, const Alpha& alpha, const FinderOptions& opts = {});
std::vector<GappedPalindrome> find_short_palindromes(const Word& w, const Alpha& alpha,
                                                     const FinderOptions& opts = {});
std::vector<GappedPalindrome> find_long_palindromes(const Word& w, const Alpha& alpha,
                                                    const FinderOptions& opts = {});

// Extends the match w[pos_left..] = w[pos_right..] of length seg_len both ways.
std::optional<GappedRepeat> extend_candidate(const LceOracle& o, const Alpha& alpha, std::int64_t min_gap,
                                             std::int64_t pos_left, std::int64_t pos_right, std::int64_t seg_len,
                                             const Placement& where = {});
// Mirror image: w[pos_left .. pos_left+seg_len-1] is the reverse of w[pos_right .. pos_right+seg_len-1].
std::optional<GappedPalindrome> extend_palindrome_candidate(const LceOracle& o, const Alpha& alpha,
                                                            std::int64_t min_gap, std::int64_t pos_left,
                                                            std::int64_t pos_right, std::int64_t seg_len,
                                                            const Placement& where = {});

// Left-arm candidates pos_left + i*period, 0 <= i < count, all matching the factor at pos_right.
std::vector<GappedRepeat> resolve_run_case(const LceOracle& o, const Alpha& alpha, std::int64_t min_gap,
                                           std::int64_t pos_left, std::int64_t period, std::int64_t count,
                                           std::int64_t pos_right, std::int64_t seg_len, const Placement& where = {});
std::vector<GappedPalindrome> resolve_palindrome_run_case(const LceOracle& o, const Alpha& alpha,
                                                          std::int64_t min_gap, std::int64_t pos_left,
                                                          std::int64_t period, std::int64_t count,
                                                          std::int64_t pos_right, std::int64_t seg_len,
                                                          const Placement& where = {});

struct BlockEncoding {
    std::int64_t block_len = 0;
    std::int64_t region_from = 1;
    std::int64_t full_blocks = 0;
    Word blocks;  // one letter per block; a trailing partial block gets the largest letter
};

BlockEncoding build_block_encoding(const Word& w, const LceOracle& o, std::int64_t block_len,
                                   std::int64_t from = 1, std::int64_t to = -1);

}  // namespace gapped
