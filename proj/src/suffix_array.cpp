#include "gapped/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace gapped {

namespace {

using Vec = std::vector<std::int32_t>;

Vec sa_naive(const Vec& s) {
    const int n = static_cast<int>(s.size());
    Vec sa(n);
    std::iota(sa.begin(), sa.end(), 0);
    std::sort(sa.begin(), sa.end(), [&](int a, int b) {
        if (a == b) return false;
        while (a < n && b < n) {
            if (s[a] != s[b]) return s[a] < s[b];
            ++a;
            ++b;
        }
        return a == n;
    });
    return sa;
}

Vec sa_is(const Vec& s, int upper) {
    const int n = static_cast<int>(s.size());
    if (n == 0) return {};
    if (n == 1) return {0};
    if (n < 12) return sa_naive(s);

    Vec sa(n);
    std::vector<bool> ls(n);  // true = S-type
    for (int i = n - 2; i >= 0; --i) ls[i] = (s[i] == s[i + 1]) ? ls[i + 1] : (s[i] < s[i + 1]);

    Vec sum_l(upper + 1), sum_s(upper + 1);
    for (int i = 0; i < n; ++i) {
        if (!ls[i]) ++sum_s[s[i]];
        else ++sum_l[s[i] + 1];
    }
    for (int i = 0; i <= upper; ++i) {
        sum_s[i] += sum_l[i];
        if (i < upper) sum_l[i + 1] += sum_s[i];
    }

    Vec buf(upper + 1);
    auto induce = [&](const Vec& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::copy(sum_s.begin(), sum_s.end(), buf.begin());
        for (int d : lms) {
            if (d == n) continue;
            sa[buf[s[d]]++] = d;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        sa[buf[s[n - 1]]++] = n - 1;
        for (int i = 0; i < n; ++i) {
            int v = sa[i];
            if (v >= 1 && !ls[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        for (int i = n - 1; i >= 0; --i) {
            int v = sa[i];
            if (v >= 1 && ls[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
        }
    };

    Vec lms_map(n + 1, -1);
    int m = 0;
    for (int i = 1; i < n; ++i) {
        if (!ls[i - 1] && ls[i]) lms_map[i] = m++;
    }
    Vec lms;
    lms.reserve(m);
    for (int i = 1; i < n; ++i) {
        if (!ls[i - 1] && ls[i]) lms.push_back(i);
    }
    induce(lms);

    if (m) {
        Vec sorted_lms;
        sorted_lms.reserve(m);
        for (int v : sa) {
            if (lms_map[v] != -1) sorted_lms.push_back(v);
        }
        Vec rec_s(m);
        int rec_upper = 0;
        rec_s[lms_map[sorted_lms[0]]] = 0;
        for (int i = 1; i < m; ++i) {
            int l = sorted_lms[i - 1], r = sorted_lms[i];
            int end_l = (lms_map[l] + 1 < m) ? lms[lms_map[l] + 1] : n;
            int end_r = (lms_map[r] + 1 < m) ? lms[lms_map[r] + 1] : n;
            bool same = true;
            if (end_l - l != end_r - r) {
                same = false;
            } else {
                while (l < end_l && s[l] == s[r]) {
                    ++l;
                    ++r;
                }
                if (l == n || s[l] != s[r]) same = false;
            }
            if (!same) ++rec_upper;
            rec_s[lms_map[sorted_lms[i]]] = rec_upper;
        }
        Vec rec_sa = sa_is(rec_s, rec_upper);
        for (int i = 0; i < m; ++i) sorted_lms[i] = lms[rec_sa[i]];
        induce(sorted_lms);
    }
    return sa;
}

}  // namespace

std::vector<std::int32_t> suffix_array(const std::vector<std::int32_t>& s, std::int32_t upper) {
    return sa_is(s, upper);
}

std::vector<std::int32_t> inverse_permutation(const std::vector<std::int32_t>& sa) {
    Vec rank(sa.size());
    for (std::size_t r = 0; r < sa.size(); ++r) rank[sa[r]] = static_cast<std::int32_t>(r);
    return rank;
}

std::vector<std::int32_t> lcp_array(const std::vector<std::int32_t>& s, const std::vector<std::int32_t>& sa,
                                    const std::vector<std::int32_t>& rank) {
    const int n = static_cast<int>(s.size());
    Vec lcp(n, 0);
    int h = 0;
    for (int i = 0; i < n; ++i) {
        if (h > 0) --h;
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        int j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[rank[i]] = h;
    }
    return lcp;
}

}  // namespace gapped
