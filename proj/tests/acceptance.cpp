// End-to-end acceptance checks. One PASS/FAIL line per criterion; exit status 1 on any failure.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gapped/finder.hpp"
#include "gapped/io.hpp"
#include "gapped/occindex.hpp"
#include "gapped/runs.hpp"
#include "gapped/verify.hpp"
#include "oracles.hpp"

using namespace gapped;
namespace fs = std::filesystem;

namespace {

struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void check(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what();
    }
    bool ok() const { return failures == 0; }
};

std::string show(const Word& w) {
    std::string s;
    for (std::int64_t i = 1; i <= w.size() && i <= 40; ++i) s += std::to_string(w[i] - 1);
    if (w.size() > 40) s += "...(n=" + std::to_string(w.size()) + ")";
    return s.empty() ? "<empty>" : s;
}

// Per-word checks shared by criteria 4, 5 and 6.
struct WordChecks {
    Tally bounds, runs, classes;

    void add(const Word& w, const Alpha& a, const std::vector<GappedRepeat>& reps,
             const std::vector<GappedPalindrome>& pals, const std::vector<Run>& rs) {
        const BoundsReport r = verify_bounds(w, a, reps, pals, rs);
        auto tag = [&] { return show(w) + " alpha=" + a.to_string(); };
        bounds.check(r.repeats_ok && r.palindromes_ok, [&] {
            return tag() + " repeats=" + std::to_string(r.repeat_count) +
                   " palindromes=" + std::to_string(r.palindrome_count);
        });
        classes.check(r.periodic_repeats_ok && r.aperiodic_repeats_ok && r.periodic_palindromes_ok &&
                          r.aperiodic_palindromes_ok,
                      [&] {
                          return tag() + " periodic/aperiodic repeats " + std::to_string(r.periodic_repeats) + "/" +
                                 std::to_string(r.aperiodic_repeats) + ", palindromes " +
                                 std::to_string(r.periodic_palindromes) + "/" +
                                 std::to_string(r.aperiodic_palindromes) + ", E=" + format_rational(r.exponent_sum);
                      });
    }

    void add_runs(const Word& w, const std::vector<Run>& rs) {
        runs.check(w.size() == 0 || exponent_sum(rs) < 3 * w.size(), [&] { return show(w) + " E too large"; });
        for (std::size_t i = 0; i < rs.size(); ++i) {
            for (std::size_t j = i + 1; j < rs.size() && rs[j].start <= rs[i].end; ++j) {
                if (rs[i].period != rs[j].period) continue;
                const std::int64_t overlap = std::min(rs[i].end, rs[j].end) - rs[j].start + 1;
                runs.check(overlap < rs[i].period, [&] { return show(w) + " same-period runs overlap"; });
            }
        }
    }
};

void report(int id, const std::string& title, const Tally& t, const std::string& extra = "") {
    std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << t.checks
              << " checks, " << t.failures << " failures" << (extra.empty() ? "" : ", " + extra) << ")";
    if (!t.ok()) std::cout << " first: " << t.first;
    std::cout << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Criteria 1 and 2, folding the per-word checks into `wc`.
void exhaustive(Tally& reps, Tally& pals, WordChecks& wc) {
    const Alpha alphas[] = {Alpha(1), Alpha(3, 2), Alpha(2), Alpha(4)};
    for (int len = 0; len <= 12; ++len) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            const Word w = oracle::binary_word(mask, len);
            const auto rs = compute_runs(w);
            wc.add_runs(w, rs);
            for (const Alpha& a : alphas) {
                for (std::int64_t g : {0, 1}) {
                    FinderOptions o;
                    o.min_gap = g;
                    const auto fr = find_all_repeats(w, a, o);
                    const auto fp = find_all_palindromes(w, a, o);
                    auto tag = [&] { return show(w) + " alpha=" + a.to_string() + " min-gap=" + std::to_string(g); };
                    reps.check(fr == brute_repeats(w, a, g), tag);
                    pals.check(fp == brute_palindromes(w, a, g), tag);
                    wc.add(w, a, fr, fp, rs);
                }
            }
        }
    }
}

void randomized(Tally& t, WordChecks& wc) {
    std::mt19937_64 rng(20240601);
    const int sigmas[] = {2, 4, 26};
    const Alpha alphas[] = {Alpha(3, 2), Alpha(2), Alpha(8)};
    std::uniform_int_distribution<std::int64_t> len(50, 2000);
    for (int k = 0; k < 600; ++k) {
        const Word w = oracle::random_word(rng, len(rng), sigmas[k % 3]);
        const Alpha& a = alphas[(k / 3) % 3];
        const std::int64_t g = (k / 9) % 2;
        FinderOptions o;
        o.min_gap = g;
        const auto fr = find_all_repeats(w, a, o);
        const auto fp = find_all_palindromes(w, a, o);
        auto tag = [&] { return show(w) + " alpha=" + a.to_string() + " min-gap=" + std::to_string(g); };
        t.check(fr == brute_repeats(w, a, g), tag);
        t.check(fp == brute_palindromes(w, a, g), tag);
        const auto rs = compute_runs(w);
        wc.add_runs(w, rs);
        wc.add(w, a, fr, fp, rs);
    }
}

void runs_exhaustive(Tally& t) {
    for (int len = 0; len <= 14; ++len) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            const Word w = oracle::binary_word(mask, len);
            t.check(compute_runs(w) == oracle::runs(w), [&] { return show(w) + " runs differ"; });
        }
    }
}

void cover(Tally& t) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::int64_t> len(1, 1000);
    for (int k = 0; k < 200; ++k) {
        const Word w = oracle::random_word(rng, len(rng), std::vector<int>{2, 3, 4, 26}[k % 4]);
        const RunIndex index(w.size(), compute_runs(w));
        for (const Alpha& a : {Alpha(3, 2), Alpha(2), Alpha(8)}) {
            const auto cr = check_cover_disjointness(aperiodic_only(find_all_repeats(w, a), index, kRepeatBeta), a,
                                                     kRepeatBeta);
            const auto cp = check_cover_disjointness(
                aperiodic_only(find_all_palindromes(w, a), index, kPalindromeBeta), a, kPalindromeBeta);
            for (const auto* c : {&cr, &cp}) {
                t.check(c->disjoint, [&] {
                    return show(w) + " alpha=" + a.to_string() + " points (" + std::to_string(c->witness->first.x) +
                           "," + std::to_string(c->witness->first.y) + ") (" + std::to_string(c->witness->second.x) +
                           "," + std::to_string(c->witness->second.y) + ")";
                });
            }
        }
    }
}

// Adjacent singles in the decoded order must sit more than len/2 apart.
void spacing(Tally& t, const OccurrenceSet& s, std::int64_t len) {
    std::vector<std::pair<std::int64_t, bool>> items;
    for (auto p : s.singles) items.push_back({p, true});
    for (const auto& g : s.groups) items.push_back({g.first, false});
    std::sort(items.begin(), items.end());
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (!items[i - 1].second || !items[i].second) continue;
        t.check(2 * (items[i].first - items[i - 1].first) > len, [&] { return "singles too close"; });
    }
}

void occurrences(Tally& t) {
    std::mt19937_64 rng(4242);
    int queries = 0;
    while (queries < 10000) {
        const Word w = oracle::random_word(rng, 2 + static_cast<std::int64_t>(rng() % 600), 1 + queries % 4);
        const BasicFactorDictionary d(w);
        const LceOracle o(w);
        for (int q = 0; q < 50; ++q) {
            const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(d.levels()));
            const std::int64_t len = std::int64_t{1} << k;
            if (len > w.size()) continue;
            const std::int64_t i = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(w.size() - len + 1));
            const std::int64_t j = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(w.size()));
            const std::int64_t c = 2 + static_cast<std::int64_t>(rng() % 6);
            const auto got = d.occurrences_in_range(o, i, k, j, c);
            t.check(got.decode() == oracle::occurrences(w, i, len, j, j + c * len - 1),
                    [&] { return show(w) + " dictionary query differs"; });
            spacing(t, got, len);
            ++queries;
        }
    }
    queries = 0;
    while (queries < 10000) {
        const std::int64_t log_n = 2 + static_cast<std::int64_t>(rng() % 5);
        const std::int64_t beta = 16 + static_cast<std::int64_t>(rng() % 40);
        const std::int64_t n = beta * log_n + static_cast<std::int64_t>(rng() % 300);
        const Word w = oracle::random_word(rng, n, 1 + queries % 4);
        const LceOracle o(w);
        const bool mirrored = rng() % 2;
        const std::int64_t from = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
        const auto idx = WindowBitsetIndex::make(w, from, beta, log_n, mirrored);
        const std::int64_t width = idx.to() - from + 1;
        for (int q = 0; q < 50; ++q) {
            const std::int64_t len = std::int64_t{1} << (rng() % 7);
            if (len > width) continue;
            const std::int64_t pos = from + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(width / len)) * len;
            if (!idx.admissible(pos, len)) continue;
            const bool rev = mirrored && rng() % 2;
            const std::int64_t zlo = from + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(width));
            const std::int64_t zhi = zlo + static_cast<std::int64_t>(rng() % (4 * static_cast<std::uint64_t>(len) + 8));
            const auto got = idx.select(o, pos, len, zlo, zhi, rev);
            const auto want = rev ? oracle::reversed_occurrences(w, pos, len, zlo, std::min(zhi, idx.to() - len + 1))
                                  : oracle::occurrences(w, pos, len, zlo, std::min(zhi, idx.to() - len + 1));
            t.check(got.decode() == want, [&] { return show(w) + " window query differs"; });
            spacing(t, got, len);
            ++queries;
        }
    }
}

void scaling(Tally& t, std::string& table) {
    std::mt19937_64 rng(99);
    double prev = 0;
    std::ostringstream os;
    for (int e = 16; e <= 20; ++e) {
        const Word w = oracle::random_word(rng, std::int64_t{1} << e, 4);
        std::vector<double> times;
        for (int r = 0; r < 3; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto reps = find_all_repeats(w, Alpha(2));
            const auto pals = find_all_palindromes(w, Alpha(2));
            times.push_back(seconds_since(t0));
        }
        std::sort(times.begin(), times.end());
        const double med = times[1];
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s2^%d=%.2fs", e == 16 ? "" : " ", e, med);
        os << buf;
        if (prev > 0) {
            const double ratio = med / prev;
            std::snprintf(buf, sizeof buf, "(x%.2f)", ratio);
            os << buf;
            t.check(ratio <= 3.0, [&] { return "ratio " + std::to_string(ratio) + " at 2^" + std::to_string(e); });
        }
        prev = med;
    }
    table = os.str();
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + GAPPED_CLI + "\" " + args;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return "<popen failed>";
    std::string out;
    char buf[1 << 16];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    const int status = pclose(p);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out += "<exit " + std::to_string(status) + ">";
    return out;
}

void determinism(Tally& t) {
    const fs::path in = fs::temp_directory_path() / ("gapped_acceptance_" + std::to_string(::getpid()) + ".txt");
    {
        std::mt19937_64 rng(1);
        std::string s(1 << 20, 'a');
        for (auto& ch : s) ch = "acgt"[rng() % 4];
        std::ofstream(in, std::ios::binary) << s;
    }
    for (const char* cmd : {"find-repeats", "find-palindromes"}) {
        const std::string base = std::string(cmd) + " --alpha 2 --input \"" + in.string() + "\"";
        const std::string ref = run_cli(base + " --threads 1");
        t.check(!ref.empty() && ref.find("<exit") == std::string::npos, [&] { return std::string(cmd) + " failed"; });
        for (int r = 0; r < 2; ++r) {
            t.check(run_cli(base + " --threads 1") == ref, [&] { return std::string(cmd) + " differs across runs"; });
        }
        for (int r = 0; r < 3; ++r) {
            t.check(run_cli(base + " --threads 4") == ref, [&] { return std::string(cmd) + " differs with 4 threads"; });
        }
    }
    fs::remove(in);
}

}  // namespace

int main() {
    bool all = true;
    auto timed = [&](int id, const std::string& title, const Tally& t, std::chrono::steady_clock::time_point t0,
                     const std::string& extra = "") {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1fs", seconds_since(t0));
        report(id, title, t, extra.empty() ? buf : extra + ", " + buf);
        all &= t.ok();
    };

    WordChecks wc;
    auto t0 = std::chrono::steady_clock::now();
    Tally c1, c2, c3;
    exhaustive(c1, c2, wc);
    timed(1, "exhaustive binary n<=12, repeats equal the oracle", c1, t0);
    report(2, "exhaustive binary n<=12, palindromes equal the oracle", c2);
    all &= c2.ok();

    t0 = std::chrono::steady_clock::now();
    randomized(c3, wc);
    timed(3, "600 random words n in [50,2000], both kinds equal the oracles", c3, t0);

    report(4, "|G| < 18 alpha n and |P| < 28 alpha n + 7n on every word above", wc.bounds);
    all &= wc.bounds.ok();

    t0 = std::chrono::steady_clock::now();
    Tally c5 = wc.runs;
    runs_exhaustive(c5);
    timed(5, "E(w) < 3n, same-period overlap, runs equal the oracle for binary n<=14", c5, t0);

    report(6, "periodic and aperiodic class bounds on every word above", wc.classes);
    all &= wc.classes.ok();

    t0 = std::chrono::steady_clock::now();
    Tally c7;
    cover(c7);
    timed(7, "aperiodic covers are disjoint on 200 random words", c7, t0);

    t0 = std::chrono::steady_clock::now();
    Tally c8;
    occurrences(c8);
    timed(8, "2x10^4 occurrence queries equal naive scans, singles spaced > |y|/2", c8, t0);

    t0 = std::chrono::steady_clock::now();
    Tally c9;
    std::string table;
    scaling(c9, table);
    timed(9, "median-of-3 time per doubling <= 3x for n = 2^16..2^20", c9, t0, table);

    t0 = std::chrono::steady_clock::now();
    Tally c10;
    determinism(c10);
    timed(10, "CLI output identical across runs and thread counts on 1 MB", c10, t0);

    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
    return all ? 0 : 1;
}
