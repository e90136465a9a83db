#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gapped/core.hpp"
#include "gapped/lce.hpp"

namespace gapped {

struct OccurrenceGroup {
    std::int64_t first = 0;
    std::int64_t step = 0;
    std::int64_t count = 0;
    friend bool operator==(const OccurrenceGroup&, const OccurrenceGroup&) = default;
};

struct OccurrenceSet {
    std::vector<std::int64_t> singles;
    std::vector<OccurrenceGroup> groups;

    bool empty() const { return singles.empty() && groups.empty(); }
    void clear() {
        singles.clear();
        groups.clear();
    }
    std::vector<std::int64_t> decode() const;
};

// Identifiers and sorted occurrence lists for every factor of length 2^k.
class BasicFactorDictionary {
public:
    BasicFactorDictionary() = default;
    explicit BasicFactorDictionary(const Word& w);

    std::int64_t n() const { return n_; }
    int levels() const { return static_cast<int>(levels_.size()); }
    // -1 when the factor runs past the end.
    std::int32_t id(int k, std::int64_t pos) const { return levels_[k].ids[pos - 1]; }
    std::span<const std::int32_t> occurrences(int k, std::int32_t id) const;

    const std::vector<std::int32_t>& suffix_array() const { return sa_; }

    // Occurrences of w[i..i+2^k-1] that start in [from, to].
    OccurrenceSet occurrences_in_span(const LceOracle& oracle, std::int64_t i, int k, std::int64_t from,
                                      std::int64_t to) const;
    void occurrences_in_span(const LceOracle& oracle, std::int64_t i, int k, std::int64_t from,
                             std::int64_t to, OccurrenceSet& out) const;
    // Starts inside z = w[j .. j + c*2^k - 1], clipped to n.
    OccurrenceSet occurrences_in_range(const LceOracle& oracle, std::int64_t i, int k, std::int64_t j,
                                       std::int64_t c) const;

private:
    struct Level {
        std::vector<std::int32_t> ids;
        std::vector<std::int32_t> offset;
        std::vector<std::int32_t> positions;
    };
    std::int64_t n_ = 0;
    std::vector<std::int32_t> sa_;
    std::vector<Level> levels_;
};

// Occurrence bit-sets for the factors of a window v = w[from..to]. Keys are the factors
// y = w[pos..pos+len-1] aligned to `from` (pos - from divisible by len) with pos >= zone_from,
// or their reversals when the index is mirrored.
class WindowBitsetIndex {
public:
    WindowBitsetIndex() = default;

    // Window of beta * log_n positions starting at `from`; the zone is its last zone_blocks * log_n.
    static WindowBitsetIndex make(const Word& w, std::int64_t from, std::int64_t beta, std::int64_t log_n,
                                  bool mirrored = false, std::int64_t zone_blocks = 16);

    void build(const Word& w, std::int64_t from, std::int64_t to, std::int64_t zone_from, bool mirrored);

    std::int64_t from() const { return from_; }
    std::int64_t to() const { return to_; }
    std::int64_t zone_from() const { return zone_from_; }
    bool mirrored() const { return mirrored_; }

    bool admissible(std::int64_t pos, std::int64_t len) const;

    // Start positions in v of y (or reverse(y)), ascending.
    std::vector<std::int64_t> occurrences(std::int64_t pos, std::int64_t len, bool reversed = false) const;

    // Occurrences starting in [zlo, zhi] with runs grouped through `oracle` (built over w).
    OccurrenceSet select(const LceOracle& oracle, std::int64_t pos, std::int64_t len, std::int64_t zlo,
                         std::int64_t zhi, bool reversed = false) const;
    void select(const LceOracle& oracle, std::int64_t pos, std::int64_t len, std::int64_t zlo, std::int64_t zhi,
                bool reversed, OccurrenceSet& out) const;

private:
    // Node whose bit-set lists the key's occurrences, or -1 when the key's own suffix is the only match.
    std::int32_t locate(std::int64_t pos, std::int64_t len, bool reversed, std::int32_t& leaf) const;
    std::int64_t next_bit(std::int32_t node, std::int64_t from_bit, std::int64_t limit) const;

    std::int64_t from_ = 1, to_ = 0, zone_from_ = 1, width_ = 0;
    bool mirrored_ = false;
    std::size_t words_ = 0;

    std::vector<std::int32_t> text_;
    std::vector<std::int32_t> remap_;
    std::vector<std::int32_t> sa_, rank_, lcp_;
    std::vector<std::int32_t> node_lcp_;
    std::vector<std::int32_t> leaf_parent_;
    std::vector<std::vector<std::int32_t>> up_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace gapped
