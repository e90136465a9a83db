#include "gapped/finder.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "gapped/occindex.hpp"

namespace gapped {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

struct Ctx {
    const LceOracle& o;
    Alpha alpha;
    i64 min_gap;
    i64 n;
};

// Raw outcome of extending one left/right match, valid or not.
struct Cand {
    i64 bl, arm, br, er, gap, span, slack;
};

bool fits(const Ctx& c, const Cand& x, const Placement& pl) {
    return x.gap >= c.min_gap && x.arm >= pl.arm_lo && x.arm <= pl.arm_hi && x.br >= pl.b_right_lo &&
           x.br <= pl.b_right_hi && x.er >= pl.e_right_lo && x.er <= pl.e_right_hi && x.bl >= pl.extent_lo &&
           x.er <= pl.extent_hi && c.alpha.admits(x.span, x.arm);
}

// Maximal p-periodic factors around the left and right occurrences.
struct RunFrame {
    i64 a_left, b_left, a_right, b_right;
};

std::int32_t i32(i64 v) { return static_cast<std::int32_t>(v); }

struct RepeatKind {
    using Record = GappedRepeat;
    static constexpr bool kMirrored = false;
    static constexpr bool kParitySplit = false;

    static Cand extend(const Ctx& c, i64 s, i64 P, i64 L) {
        const i64 pre = c.o.lcs_u(s - 1, P - 1);
        const i64 sfx = P + L <= c.n ? c.o.lce_u(s + L, P + L) : 0;
        Cand x;
        x.arm = pre + L + sfx;
        x.bl = s - pre;
        x.br = P - pre;
        x.er = x.br + x.arm - 1;
        x.span = P - s;
        x.gap = x.span - x.arm;
        x.slack = 0;
        return x;
    }
    static Record record(const Cand& x) { return {i32(x.bl), i32(x.arm), i32(x.span)}; }

    // Starts of the left copy of a key at P, for right arms with length in [lo, hi].
    static std::pair<i64, i64> left_range(const Ctx& c, i64 P, i64 /*L*/, i64 lo, i64 hi, i64 /*dmax*/) {
        return {P - c.alpha.floor_times(hi), P - lo - c.min_gap};
    }
    static i64 key_text(const Ctx& /*c*/, i64 P, i64 /*L*/) { return P - 1; }

    static i64 h1(const RunFrame& f, i64 s, i64 P, i64 /*L*/) { return (s - f.a_left) - (P - f.a_right); }
    static i64 h2(const RunFrame& f, i64 s, i64 P, i64 /*L*/) { return (f.b_left - s) - (f.b_right - P); }

    static void unit_arms(const Ctx& c, const Word& w, std::vector<Record>& out) {
        const i64 top = c.alpha.floor_times(1);
        for (i64 q = std::max<i64>(1, 1 + c.min_gap); q <= top && q < c.n; ++q) {
            for (i64 i = 1; i + q <= c.n; ++i) {
                if (w[i] != w[i + q]) continue;
                if (i > 1 && w[i - 1] == w[i + q - 1]) continue;
                if (i + q < c.n && w[i + 1] == w[i + q + 1]) continue;
                out.push_back({i32(i), 1, i32(q)});
            }
        }
    }
};

struct PalindromeKind {
    using Record = GappedPalindrome;
    static constexpr bool kMirrored = true;
    static constexpr bool kParitySplit = true;

    // w[s..s+L-1] is the reverse of w[P..P+L-1], s + L <= P.
    static Cand extend(const Ctx& c, i64 s, i64 P, i64 L) {
        const i64 out = c.o.palext_u(s - 1, P + L);
        const i64 g0 = P - s - L;
        const i64 raw = g0 > 0 ? c.o.inward_u(s + L, P - 1) : 0;
        const i64 half = g0 / 2;
        const i64 in = std::min(raw, half);
        Cand x;
        x.arm = out + L + in;
        x.bl = s - out;
        x.br = P - in;
        x.er = P + L - 1 + out;
        x.gap = g0 - 2 * in;
        x.span = x.arm + x.gap;
        x.slack = raw - half;
        return x;
    }
    static Record record(const Cand& x) { return {i32(x.bl), i32(x.arm), i32(x.gap)}; }

    static std::pair<i64, i64> left_range(const Ctx& c, i64 P, i64 L, i64 /*lo*/, i64 hi, i64 dmax) {
        return {P - L - (c.alpha.floor_times(hi) - hi) - 2 * dmax, P - L - c.min_gap};
    }
    static i64 key_text(const Ctx& c, i64 P, i64 L) { return c.o.mirror(P + L - 1); }

    static i64 h1(const RunFrame& f, i64 s, i64 P, i64 L) { return (s - f.a_left) - (f.b_right - P - L + 1); }
    static i64 h2(const RunFrame& f, i64 s, i64 P, i64 L) { return (f.b_left - s - L + 1) - (P - f.a_right); }

    static void unit_arms(const Ctx& c, const Word& w, std::vector<Record>& out) {
        const i64 top = c.alpha.floor_times(1) - 1;
        for (i64 g = c.min_gap; g <= top; ++g) {
            for (i64 i = 1; i + 1 + g <= c.n; ++i) {
                const i64 j = i + 1 + g;
                if (w[i] != w[j]) continue;
                if (i > 1 && j < c.n && w[i - 1] == w[j + 1]) continue;
                if (g > 1 && w[i + 1] == w[j - 1]) continue;
                out.push_back({i32(i), 1, i32(g)});
            }
        }
    }
};

// Feasible x in [lo, hi] for v0 + (v1 - v0) * x >= 0.
void constrain(i128 v0, i128 v1, i64& lo, i64& hi) {
    const i128 d = v1 - v0;
    if (d == 0) {
        if (v0 < 0) hi = lo - 1;
        return;
    }
    if (d > 0) {
        // x >= ceil(-v0 / d)
        i128 num = -v0;
        i128 q = num / d;
        if (num % d != 0 && num > 0) ++q;
        if (q > lo) lo = q > hi ? hi + 1 : static_cast<i64>(q);
    } else {
        // x <= floor(v0 / -d)
        const i128 dd = -d;
        i128 q = v0 / dd;
        if (v0 % dd != 0 && v0 < 0) --q;
        if (q < hi) hi = q < lo ? lo - 1 : static_cast<i64>(q);
    }
}

template <class Kind>
class Engine {
public:
    using Record = typename Kind::Record;

    Engine(const Ctx& c, std::vector<Record>& out) : c_(c), out_(out) {}

    void single(i64 s, i64 P, i64 L, const Placement& pl) {
        const Cand x = Kind::extend(c_, s, P, L);
        if (fits(c_, x, pl)) out_.push_back(Kind::record(x));
    }

    // Left candidates s0 + i*p, i < t; the key at P has period p.
    void run_case(i64 s0, i64 p, i64 t, i64 P, i64 L, const Placement& pl) {
        RunFrame f;
        f.a_left = s0 - c_.o.lcs_u(s0 - 1, s0 + p - 1);
        f.b_left = c_.o.lpe_u(s0, p);
        f.a_right = P - c_.o.lcs_u(P - 1, P + p - 1);
        f.b_right = c_.o.lpe_u(P, p);
        if (Kind::kParitySplit && (p & 1)) {
            by_class(f, s0, 2 * p, (t + 1) / 2, P, L, pl);
            by_class(f, s0 + p, 2 * p, t / 2, P, L, pl);
        } else {
            by_class(f, s0, p, t, P, L, pl);
        }
    }

private:
    using Segs = std::vector<std::pair<i64, i64>>;

    template <class F>
    static void split(Segs& segs, F&& f) {
        Segs next;
        for (auto [a, b] : segs) {
            if (b - a < 2) {
                next.push_back({a, b});
                continue;
            }
            const i64 f0 = f(a);
            const i64 d = f(a + 1) - f0;
            if (d == 0) {
                next.push_back({a, b});
                continue;
            }
            const i64 z = a + floor_div(-f0, d);
            i64 cur = a;
            for (i64 cut : {z, z + 1, z + 2}) {
                if (cut > cur && cut <= b) {
                    next.push_back({cur, cut - 1});
                    cur = cut;
                }
            }
            next.push_back({cur, b});
        }
        segs.swap(next);
    }

    void by_class(const RunFrame& f, i64 first, i64 step, i64 cnt, i64 P, i64 L, const Placement& pl) {
        if (cnt <= 0) return;
        auto pos = [&](i64 j) { return first + j * step; };
        Segs segs{{0, cnt - 1}};
        split(segs, [&](i64 j) { return Kind::h1(f, pos(j), P, L); });
        split(segs, [&](i64 j) { return Kind::h2(f, pos(j), P, L); });
        if constexpr (Kind::kParitySplit) {
            split(segs, [&](i64 j) { return Kind::extend(c_, pos(j), P, L).slack; });
        }
        for (auto [a, b] : segs) solve(pos(a), step, b - a, P, L, pl);
    }

    // Candidates s + x*step, 0 <= x <= span, on which every quantity is linear in x.
    void solve(i64 s, i64 step, i64 span, i64 P, i64 L, const Placement& pl) {
        if (span < 2) {
            for (i64 x = 0; x <= span; ++x) single(s + x * step, P, L, pl);
            return;
        }
        const Cand u = Kind::extend(c_, s, P, L);
        const Cand v = Kind::extend(c_, s + step, P, L);
        i64 lo = 0, hi = span;
        constrain(u.gap - c_.min_gap, v.gap - c_.min_gap, lo, hi);
        constrain(i128{u.arm} - pl.arm_lo, i128{v.arm} - pl.arm_lo, lo, hi);
        constrain(i128{pl.arm_hi} - u.arm, i128{pl.arm_hi} - v.arm, lo, hi);
        constrain(i128{u.br} - pl.b_right_lo, i128{v.br} - pl.b_right_lo, lo, hi);
        constrain(i128{pl.b_right_hi} - u.br, i128{pl.b_right_hi} - v.br, lo, hi);
        constrain(i128{u.er} - pl.e_right_lo, i128{v.er} - pl.e_right_lo, lo, hi);
        constrain(i128{pl.e_right_hi} - u.er, i128{pl.e_right_hi} - v.er, lo, hi);
        constrain(i128{u.bl} - pl.extent_lo, i128{v.bl} - pl.extent_lo, lo, hi);
        constrain(i128{pl.extent_hi} - u.er, i128{pl.extent_hi} - v.er, lo, hi);
        const i128 an = c_.alpha.num(), ad = c_.alpha.den();
        constrain(an * u.arm - ad * u.span, an * v.arm - ad * v.span, lo, hi);
        for (i64 x = lo; x <= hi; ++x) single(s + x * step, P, L, pl);
    }

    const Ctx& c_;
    std::vector<Record>& out_;
};

template <class F>
void parallel_chunks(i64 count, unsigned threads, F&& fn) {
    if (count <= 0) return;
    const i64 t = std::max<i64>(1, std::min<i64>(threads, count));
    if (t == 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    for (i64 k = 0; k < t; ++k) {
        const i64 b = count * k / t, e = count * (k + 1) / t;
        pool.emplace_back([&fn, k, b, e] { fn(k, b, e); });
    }
    for (auto& th : pool) th.join();
}

template <class Record>
void concat(std::vector<std::vector<Record>>& parts, std::vector<Record>& out) {
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
}

struct Geometry {
    i64 b;       // block length
    i64 S;       // arms up to S*b are short
    i64 short_max;
};

Geometry geometry(i64 n, const FinderOptions& opts) {
    if (opts.short_arm_factor < 4) throw std::invalid_argument("short_arm_factor must be at least 4");
    if (opts.min_gap < 0) throw std::invalid_argument("min_gap must be non-negative");
    Geometry g;
    g.b = opts.log_base > 0 ? opts.log_base : log_block(n);
    g.S = opts.short_arm_factor;
    g.short_max = g.S * g.b;
    return g;
}

// Arms in [2, S*b]: one window per block of right-arm end positions.
template <class Kind>
void short_pass(const Ctx& c, const Word& w, const Geometry& geo, unsigned threads,
                std::vector<typename Kind::Record>& out) {
    using Record = typename Kind::Record;
    const i64 n = c.n, b = geo.b, S = geo.S, T = geo.short_max;
    const i64 ac = c.alpha.ceil();
    const i64 M = std::max<i64>(1, ceil_div(n, b) - S);
    std::vector<std::vector<Record>> parts(std::max<unsigned>(1, threads));
    parallel_chunks(M, threads, [&](i64 tid, i64 mb, i64 me) {
        std::vector<Record>& local = parts[static_cast<std::size_t>(tid)];
        Engine<Kind> eng(c, local);
        WindowBitsetIndex idx;
        OccurrenceSet occ;
        for (i64 m = mb; m < me; ++m) {
            const i64 e_lo = m == 0 ? 1 : (m + S) * b + 1;
            const i64 e_hi = m == M - 1 ? n : std::min(n, (m + S + 1) * b);
            if (e_lo > e_hi) continue;
            const i64 from = m == 0 ? 1 : std::max<i64>(1, e_lo - S * (ac + 1) * b);
            const i64 zone_from = std::max(from, e_lo - S * b);
            idx.build(w, from, e_hi, zone_from, Kind::kMirrored);
            for (i64 L = 1; 2 * L <= T; L *= 2) {
                const i64 lo = 2 * L, hi = std::min(4 * L - 1, T);
                Placement pl;
                pl.arm_lo = lo;
                pl.arm_hi = hi;
                pl.e_right_lo = e_lo;
                pl.e_right_hi = e_hi;
                const i64 p_min = std::max(from, e_lo - hi + 1);
                i64 P = from + ceil_div(p_min - from, L) * L;
                for (; P <= e_hi - L; P += L) {
                    auto [s_lo, s_hi] = Kind::left_range(c, P, L, lo, hi, L - 1);
                    s_lo = std::max(s_lo, from);
                    if (s_lo > s_hi) continue;
                    pl.b_right_lo = P - L + 1;
                    pl.b_right_hi = P;
                    idx.select(c.o, P, L, s_lo, s_hi, Kind::kMirrored, occ);
                    for (i64 s : occ.singles) eng.single(s, P, L, pl);
                    for (const auto& g : occ.groups) eng.run_case(g.first, g.step, g.count, P, L, pl);
                }
            }
        }
    });
    concat(parts, out);
}

// Cluster ids of length-b factors, indexed by 1-based w position.
std::vector<std::int32_t> block_clusters(const LceOracle& o, i64 b) {
    const auto& sa = o.suffix_array();
    const auto& lcp = o.lcp();
    const i64 n = o.n();
    std::vector<std::int32_t> cid(static_cast<std::size_t>(n + 1), -1);
    std::int32_t id = -1;
    for (std::size_t r = 0; r < sa.size(); ++r) {
        if (r == 0 || lcp[r] < b) ++id;
        if (sa[r] < n) cid[static_cast<std::size_t>(sa[r]) + 1] = id;
    }
    return cid;
}

BlockEncoding encode_blocks(const std::vector<std::int32_t>& cid, i64 b, i64 from, i64 to) {
    BlockEncoding enc;
    enc.block_len = b;
    enc.region_from = from;
    const i64 len = to - from + 1;
    enc.full_blocks = len / b;
    const i64 nb = ceil_div(len, b);
    std::vector<i64> ids(static_cast<std::size_t>(nb));
    i64 top = 0;
    for (i64 j = 0; j < enc.full_blocks; ++j) {
        ids[j] = cid[static_cast<std::size_t>(from + j * b)];
        top = std::max(top, ids[j]);
    }
    if (nb > enc.full_blocks) ids[nb - 1] = top + 1;
    enc.blocks = Word::from_ints(ids);
    return enc;
}

// Arms in [A, B] with the whole repeat inside [R0, R1] and eRight >= e_min.
template <class Kind>
void long_pass(const Ctx& c, const std::vector<std::int32_t>& cid, i64 b, i64 R0, i64 R1, i64 A, i64 B, i64 e_min,
               std::vector<typename Kind::Record>& out) {
    const i64 N = R1 - R0 + 1;
    if (A > B || N < 2 * A) return;
    const BlockEncoding enc = encode_blocks(cid, b, R0, R1);
    const Word& wp = enc.blocks;
    const i64 nb = wp.size(), full = enc.full_blocks;
    if (full < 4) return;
    const LceOracle op(wp);
    const BasicFactorDictionary dict(wp);
    const auto& sa = dict.suffix_array();
    const auto& text = c.o.text();

    // sign(suffix_J - key) over the block alphabet.
    auto compare = [&](i64 J, i64 key, i64 Y) -> int {
        const i64 pos = R0 + J * b - 1;
        const i64 lim = std::min(Y, (full - J) * b);
        const i64 l = lim <= 0 ? 0 : c.o.lce_text(key, pos);
        if (l >= lim) {
            if (lim == Y) return 0;
            return full < nb ? 1 : -1;
        }
        return text[pos + l] < text[key + l] ? -1 : 1;
    };
    auto find_blocks = [&](i64 key, i64 Y) -> i64 {
        i64 lo = 0, hi = nb;
        while (lo < hi) {
            const i64 mid = (lo + hi) / 2;
            if (compare(sa[mid], key, Y) < 0) lo = mid + 1;
            else hi = mid;
        }
        return (lo < nb && compare(sa[lo], key, Y) == 0) ? sa[lo] : -1;
    };

    Engine<Kind> eng(c, out);
    OccurrenceSet occ;
    for (int k = 1; k <= dict.levels(); ++k) {
        const i64 K = (i64{1} << k) * b, Y = K / 2;
        if (2 * K > B || 2 * K > N) break;
        const i64 lo = std::max(2 * K, A), hi = std::min(4 * K - 1, B);
        if (lo > hi) continue;
        const int level = k - 1;
        Placement pl;
        pl.arm_lo = lo;
        pl.arm_hi = hi;
        pl.e_right_lo = std::max(R0, e_min);
        pl.e_right_hi = R1;
        pl.extent_lo = R0;
        pl.extent_hi = R1;
        for (i64 Z = R0; Z + K - 1 <= R1; Z += K) {
            pl.b_right_lo = std::max(R0, Z - K + 1);
            pl.b_right_hi = Z;
            const i64 x_hi = std::min(Z + b - 1, R1 - Y + 1);
            for (i64 x = Z; x <= x_hi; ++x) {
                const i64 J = find_blocks(Kind::key_text(c, x, Y), Y);
                if (J < 0) continue;
                auto [s_lo, s_hi] = Kind::left_range(c, x, Y, lo, hi, K + b - 2);
                s_lo = std::max(s_lo, R0);
                if (s_lo > s_hi) continue;
                const i64 j_lo = ceil_div(s_lo - R0, b) + 1;
                const i64 j_hi = floor_div(s_hi - R0, b) + 1;
                if (j_lo > j_hi) continue;
                dict.occurrences_in_span(op, J + 1, level, j_lo, j_hi, occ);
                for (i64 s : occ.singles) eng.single(R0 + (s - 1) * b, x, Y, pl);
                for (const auto& g : occ.groups) {
                    eng.run_case(R0 + (g.first - 1) * b, g.step * b, g.count, x, Y, pl);
                }
            }
        }
    }
}

template <class Kind>
void long_arms(const Ctx& c, const Geometry& geo, const FinderOptions& opts,
               std::vector<typename Kind::Record>& out) {
    using Record = typename Kind::Record;
    const i64 n = c.n, b = geo.b;
    const i64 A = geo.short_max + 1;
    if (2 * A > n) return;
    const auto cid = block_clusters(c.o, b);
    if (opts.segment_phase && c.alpha.less_than(b)) {
        const int kc = floor_log2(static_cast<std::uint64_t>(b)) + 1;
        const i64 T2 = (i64{1} << (kc + 1)) * b;
        if (T2 > A) {
            const i64 l0 = static_cast<i64>((i128{c.alpha.num()} + c.alpha.den()) * (T2 - 1) / c.alpha.den());
            if (2 * l0 < n) {
                long_pass<Kind>(c, cid, b, 1, n, T2, n, 1, out);
                const i64 bp = std::min<i64>(b, floor_log2(static_cast<std::uint64_t>(2 * l0)));
                const auto cid2 = bp == b ? cid : block_clusters(c.o, bp);
                const i64 segments = ceil_div(std::max<i64>(n - 2 * l0, 0), l0) + 1;
                std::vector<std::vector<Record>> parts(static_cast<std::size_t>(segments));
                parallel_chunks(segments, opts.threads, [&](i64, i64 mb, i64 me) {
                    for (i64 m = mb; m < me; ++m) {
                        const i64 R0 = 1 + m * l0, R1 = std::min(n, (m + 2) * l0);
                        const i64 e_min = m == 0 ? R0 : (m + 1) * l0 + 1;
                        long_pass<Kind>(c, cid2, bp, R0, R1, A, T2 - 1, e_min, parts[m]);
                    }
                });
                concat(parts, out);
                return;
            }
        }
    }
    long_pass<Kind>(c, cid, b, 1, n, A, n, 1, out);
}

template <class Record>
void canonicalize(std::vector<Record>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

enum class Part { Short, Long, All };

template <class Kind>
std::vector<typename Kind::Record> run(const Word& w, const Alpha& alpha, const FinderOptions& opts, Part part) {
    std::vector<typename Kind::Record> out;
    const i64 n = w.size();
    const Geometry geo = geometry(n, opts);
    if (n < 2) return out;
    const LceOracle o(w);
    const Ctx c{o, alpha, opts.min_gap, n};
    const unsigned threads = std::max(1u, opts.threads);
    if (part != Part::Long) {
        Kind::unit_arms(c, w, out);
        short_pass<Kind>(c, w, geo, threads, out);
    }
    if (part != Part::Short) {
        FinderOptions o2 = opts;
        o2.threads = threads;
        long_arms<Kind>(c, geo, o2, out);
    }
    canonicalize(out);
    return out;
}

}  // namespace

std::vector<GappedRepeat> find_all_repeats(const Word& w, const Alpha& alpha, const FinderOptions& opts) {
    return run<RepeatKind>(w, alpha, opts, Part::All);
}
std::vector<GappedPalindrome> find_all_palindromes(const Word& w, const Alpha& alpha, const FinderOptions& opts) {
    return run<PalindromeKind>(w, alpha, opts, Part::All);
}
std::vector<GappedRepeat> find_short_repeats(const Word& w, const Alpha& alpha, const FinderOptions& opts) {
    return run<RepeatKind>(w, alpha, opts, Part::Short);
}
std::vector<GappedRepeat> find_long_repeats(const Word& w, const Alpha& alpha, const FinderOptions& opts) {
    return run<RepeatKind>(w, alpha, opts, Part::Long);
}
std::vector<GappedPalindrome> find_short_palindromes(const Word& w, const Alpha& alpha, const FinderOptions& opts) {
    return run<PalindromeKind>(w, alpha, opts, Part::Short);
}
std::vector<GappedPalindrome> find_long_palindromes(const Word& w, const Alpha& alpha, const FinderOptions& opts) {
    return run<PalindromeKind>(w, alpha, opts, Part::Long);
}

namespace {

void check_match_args(const LceOracle& o, i64 pos_left, i64 pos_right, i64 seg_len) {
    if (seg_len < 1 || pos_left < 1 || pos_left >= pos_right || pos_right + seg_len - 1 > o.n()) {
        throw std::out_of_range("candidate match out of range");
    }
}

}  // namespace

std::optional<GappedRepeat> extend_candidate(const LceOracle& o, const Alpha& alpha, std::int64_t min_gap,
                                             std::int64_t pos_left, std::int64_t pos_right, std::int64_t seg_len,
                                             const Placement& where) {
    check_match_args(o, pos_left, pos_right, seg_len);
    const Ctx c{o, alpha, min_gap, o.n()};
    const Cand x = RepeatKind::extend(c, pos_left, pos_right, seg_len);
    if (!fits(c, x, where)) return std::nullopt;
    return RepeatKind::record(x);
}

std::optional<GappedPalindrome> extend_palindrome_candidate(const LceOracle& o, const Alpha& alpha,
                                                            std::int64_t min_gap, std::int64_t pos_left,
                                                            std::int64_t pos_right, std::int64_t seg_len,
                                                            const Placement& where) {
    check_match_args(o, pos_left, pos_right, seg_len);
    if (pos_left + seg_len > pos_right) return std::nullopt;
    const Ctx c{o, alpha, min_gap, o.n()};
    const Cand x = PalindromeKind::extend(c, pos_left, pos_right, seg_len);
    if (!fits(c, x, where)) return std::nullopt;
    return PalindromeKind::record(x);
}

std::vector<GappedRepeat> resolve_run_case(const LceOracle& o, const Alpha& alpha, std::int64_t min_gap,
                                           std::int64_t pos_left, std::int64_t period, std::int64_t count,
                                           std::int64_t pos_right, std::int64_t seg_len, const Placement& where) {
    check_match_args(o, pos_left, pos_right, seg_len);
    if (period < 1 || period > seg_len) throw std::invalid_argument("run case needs a period of at most the factor length");
    std::vector<GappedRepeat> out;
    const Ctx c{o, alpha, min_gap, o.n()};
    Engine<RepeatKind>(c, out).run_case(pos_left, period, count, pos_right, seg_len, where);
    canonicalize(out);
    return out;
}

std::vector<GappedPalindrome> resolve_palindrome_run_case(const LceOracle& o, const Alpha& alpha,
                                                          std::int64_t min_gap, std::int64_t pos_left,
                                                          std::int64_t period, std::int64_t count,
                                                          std::int64_t pos_right, std::int64_t seg_len,
                                                          const Placement& where) {
    check_match_args(o, pos_left, pos_right, seg_len);
    if (period < 1 || period > seg_len) throw std::invalid_argument("run case needs a period of at most the factor length");
    if (pos_left + (count - 1) * period + seg_len > pos_right) {
        throw std::invalid_argument("palindrome run case: left occurrences must precede the right factor");
    }
    std::vector<GappedPalindrome> out;
    const Ctx c{o, alpha, min_gap, o.n()};
    Engine<PalindromeKind>(c, out).run_case(pos_left, period, count, pos_right, seg_len, where);
    canonicalize(out);
    return out;
}

BlockEncoding build_block_encoding(const Word& w, const LceOracle& o, std::int64_t block_len, std::int64_t from,
                                   std::int64_t to) {
    if (to < 0) to = w.size();
    if (block_len < 1 || from < 1 || to > w.size() || from > to) throw std::out_of_range("block encoding: bad region");
    return encode_blocks(block_clusters(o, block_len), block_len, from, to);
}

}  // namespace gapped
