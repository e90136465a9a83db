#pragma once

#include <cstdint>
#include <vector>

namespace gapped {

// SA-IS over 0-based s with values in [0, upper]; returns 0-based start positions.
std::vector<std::int32_t> suffix_array(const std::vector<std::int32_t>& s, std::int32_t upper);

// Kasai. lcp[r] = lcp of suffixes ranked r-1 and r; lcp[0] = 0.
std::vector<std::int32_t> lcp_array(const std::vector<std::int32_t>& s, const std::vector<std::int32_t>& sa,
                                    const std::vector<std::int32_t>& rank);

std::vector<std::int32_t> inverse_permutation(const std::vector<std::int32_t>& sa);

}  // namespace gapped
