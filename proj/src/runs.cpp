#include "gapped/runs.hpp"

#include <algorithm>
#include <map>

namespace gapped {

std::vector<Run> compute_runs(const Word& w, const LceOracle& o) {
    const std::int64_t n = w.size();
    std::vector<Run> raw;
    for (std::int64_t p = 1; 2 * p <= n; ++p) {
        std::int64_t covered = 0;  // right end of the last run found for this p
        for (std::int64_t i = p; i + p <= n; i += p) {
            if (i + p - 1 <= covered) continue;
            const std::int64_t back = o.lcs_u(i - 1, i + p - 1);
            const std::int64_t fwd = o.lce_u(i, i + p);
            if (back + fwd >= p) {
                raw.push_back({i - back, i + p + fwd - 1, p});
                covered = i + p + fwd - 1;
            }
        }
    }
    std::sort(raw.begin(), raw.end(), [](const Run& a, const Run& b) {
        if (a.start != b.start) return a.start < b.start;
        if (a.end != b.end) return a.end < b.end;
        return a.period < b.period;
    });
    std::vector<Run> runs;
    for (const Run& r : raw) {
        if (!runs.empty() && runs.back().start == r.start && runs.back().end == r.end) continue;
        runs.push_back(r);
    }
    std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
        return a.start != b.start ? a.start < b.start : a.period < b.period;
    });
    return runs;
}

std::vector<Run> compute_runs(const Word& w) { return compute_runs(w, LceOracle(w)); }

Rational exponent_sum(const std::vector<Run>& runs) {
    // Group by period to keep denominators small.
    std::map<std::int64_t, std::int64_t> length_by_period;
    for (const Run& r : runs) length_by_period[r.period] += r.length();
    Rational e = 0;
    for (auto [p, len] : length_by_period) e += Rational(len, p);
    return e;
}

std::size_t run_count(const std::vector<Run>& runs) { return runs.size(); }

std::int64_t longest_periodic_prefix_length(const std::vector<Run>& runs, std::int64_t b, std::int64_t e) {
    std::int64_t best = 0;
    for (const Run& r : runs) {
        if (r.start > b) continue;
        const std::int64_t end = std::min(r.end, e);
        if (end >= b + 2 * r.period - 1) best = std::max(best, end - b + 1);
    }
    return best;
}

RunIndex::RunIndex(std::int64_t n, const std::vector<Run>& runs) : runs_(runs) {
    offset_.assign(static_cast<std::size_t>(n + 2), 0);
    for (const Run& r : runs_) {
        for (std::int64_t b = r.start; b <= r.end - 2 * r.period + 1; ++b) ++offset_[b + 1];
    }
    for (std::size_t i = 1; i < offset_.size(); ++i) offset_[i] += offset_[i - 1];
    ids_.resize(static_cast<std::size_t>(offset_.back()));
    std::vector<std::int64_t> fill(offset_.begin(), offset_.end() - 1);
    for (std::size_t id = 0; id < runs_.size(); ++id) {
        const Run& r = runs_[id];
        for (std::int64_t b = r.start; b <= r.end - 2 * r.period + 1; ++b) ids_[fill[b]++] = static_cast<std::int32_t>(id);
    }
}

std::int64_t RunIndex::longest_periodic_prefix_length(std::int64_t b, std::int64_t e) const {
    std::int64_t best = 0;
    for (std::int64_t k = offset_[b]; k < offset_[b + 1]; ++k) {
        const Run& r = runs_[ids_[k]];
        const std::int64_t end = std::min(r.end, e);
        if (end >= b + 2 * r.period - 1) best = std::max(best, end - b + 1);
    }
    return best;
}

}  // namespace gapped
