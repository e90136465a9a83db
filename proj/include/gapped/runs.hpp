#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "gapped/core.hpp"
#include "gapped/lce.hpp"

namespace gapped {

using Rational = boost::multiprecision::cpp_rational;

struct Run {
    std::int64_t start = 0;
    std::int64_t end = 0;
    std::int64_t period = 0;  // minimal

    std::int64_t length() const { return end - start + 1; }
    Fraction exponent() const { return {length(), period}; }
    friend auto operator<=>(const Run&, const Run&) = default;
};

// Sorted by (start, period).
std::vector<Run> compute_runs(const Word& w, const LceOracle& oracle);
std::vector<Run> compute_runs(const Word& w);

Rational exponent_sum(const std::vector<Run>& runs);
std::size_t run_count(const std::vector<Run>& runs);

// Linear scan over runs.
std::int64_t longest_periodic_prefix_length(const std::vector<Run>& runs, std::int64_t b, std::int64_t e);

// Per-position lists of the runs that can host a periodic prefix starting there.
class RunIndex {
public:
    RunIndex() = default;
    RunIndex(std::int64_t n, const std::vector<Run>& runs);

    std::int64_t longest_periodic_prefix_length(std::int64_t b, std::int64_t e) const;
    const std::vector<Run>& runs() const { return runs_; }

private:
    std::vector<Run> runs_;
    std::vector<std::int64_t> offset_;
    std::vector<std::int32_t> ids_;
};

}  // namespace gapped
