#include "gapped/range_min.hpp"

#include <algorithm>
#include <bit>

namespace gapped {

namespace {
constexpr std::size_t kBlock = 64;
}

RangeMin::RangeMin(std::vector<std::int32_t> values) : a_(std::move(values)) {
    const std::size_t n = a_.size();
    mask_.assign(n, 0);
    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    std::vector<std::int32_t> block_min(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t bs = b * kBlock;
        const std::size_t be = std::min(n, bs + kBlock);
        std::uint64_t cur = 0;
        std::int32_t mn = a_[bs];
        for (std::size_t i = bs; i < be; ++i) {
            while (cur && a_[bs + 63 - std::countl_zero(cur)] > a_[i]) cur ^= std::uint64_t{1} << (63 - std::countl_zero(cur));
            cur |= std::uint64_t{1} << (i - bs);
            mask_[i] = cur;
            mn = std::min(mn, a_[i]);
        }
        block_min[b] = mn;
    }
    sparse_.push_back(std::move(block_min));
    for (std::size_t len = 2; len <= blocks; len <<= 1) {
        const auto& prev = sparse_.back();
        std::vector<std::int32_t> next(blocks - len + 1);
        for (std::size_t i = 0; i + len <= blocks; ++i) next[i] = std::min(prev[i], prev[i + len / 2]);
        sparse_.push_back(std::move(next));
    }
}

std::int32_t RangeMin::in_block(std::size_t l, std::size_t r) const {
    const std::size_t bs = l - l % kBlock;
    const std::uint64_t m = mask_[r] & (~std::uint64_t{0} << (l - bs));
    return a_[bs + std::countr_zero(m)];
}

std::int32_t RangeMin::query(std::size_t l, std::size_t r) const {
    const std::size_t bl = l / kBlock, br = r / kBlock;
    if (bl == br) return in_block(l, r);
    std::int32_t res = std::min(in_block(l, bl * kBlock + kBlock - 1), in_block(br * kBlock, r));
    if (bl + 1 < br) {
        const std::size_t lo = bl + 1, cnt = br - lo;
        const int k = std::bit_width(cnt) - 1;
        res = std::min({res, sparse_[k][lo], sparse_[k][br - (std::size_t{1} << k)]});
    }
    return res;
}

}  // namespace gapped
