#pragma once

#include <cstdint>
#include <vector>

namespace gapped {

// O(n) words, O(1) query: in-block stack masks plus a sparse table over block minima.
class RangeMin {
public:
    RangeMin() = default;
    explicit RangeMin(std::vector<std::int32_t> values);

    // min over [l, r], 0-based inclusive, l <= r.
    std::int32_t query(std::size_t l, std::size_t r) const;
    std::size_t size() const { return a_.size(); }

private:
    std::int32_t in_block(std::size_t l, std::size_t r) const;

    std::vector<std::int32_t> a_;
    std::vector<std::uint64_t> mask_;
    std::vector<std::vector<std::int32_t>> sparse_;
};

}  // namespace gapped
