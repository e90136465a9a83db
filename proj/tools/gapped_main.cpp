// gapped: maximal alpha-gapped repeats and palindromes.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gapped/core.hpp"
#include "gapped/finder.hpp"
#include "gapped/io.hpp"
#include "gapped/runs.hpp"
#include "gapped/verify.hpp"

namespace {

using namespace gapped;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Config {
    std::string alpha = "2";
    std::int64_t min_gap = 1;
    std::string input;
    std::string format = "bytes";
    std::string output;
    unsigned threads = 1;
    std::uint64_t seed = 1;

    int exhaustive_binary = -1;
    int random_words = 0;
    std::int64_t max_length = 1000;
    int alphabet = 4;
    std::size_t oracle_limit = kOracleLimit;

    std::vector<std::int64_t> sizes{1 << 16, 1 << 17, 1 << 18};
    int reps = 3;
    std::string kind = "repeats";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Word load(const Config& cfg) {
    const InputFormat fmt = parse_input_format(cfg.format);
    if (cfg.input.empty() || cfg.input == "-") return read_word(std::cin, fmt);
    return read_word_file(cfg.input, fmt);
}

FinderOptions finder_options(const Config& cfg) {
    FinderOptions o;
    o.min_gap = cfg.min_gap;
    o.threads = std::max(1u, cfg.threads);
    return o;
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw UsageError("cannot open output '" + cfg.output + "'");
    out << text;
    if (!out) throw UsageError("failed writing '" + cfg.output + "'");
}

int cmd_find(const Config& cfg, bool palindromes) {
    const Alpha alpha = Alpha::parse(cfg.alpha);
    const Word w = load(cfg);
    const auto opts = finder_options(cfg);
    emit(cfg, palindromes ? format_tsv(find_all_palindromes(w, alpha, opts))
                          : format_tsv(find_all_repeats(w, alpha, opts)));
    return kOk;
}

int cmd_stats(const Config& cfg) {
    const Alpha alpha = Alpha::parse(cfg.alpha);
    const Word w = load(cfg);
    const auto reps = find_all_repeats(w, alpha, finder_options(cfg));
    const auto runs = compute_runs(w);
    const Rational bound = 18 * Rational(alpha.num(), alpha.den()) * w.size();
    std::ostringstream os;
    os << "n=" << w.size() << " alpha=" << alpha.to_string() << " repeats=" << reps.size()
       << " bound=" << format_rational(bound) << " E=" << format_rational(exponent_sum(runs))
       << " runs=" << run_count(runs) << "\n";
    emit(cfg, os.str());
    return kOk;
}

// Checks one word; appends failure descriptions to `log`. Returns false on any failure.
bool verify_word(const Word& w, const Alpha& alpha, const Config& cfg, bool use_oracle, std::ostream& log) {
    const auto opts = finder_options(cfg);
    const auto reps = find_all_repeats(w, alpha, opts);
    const auto pals = find_all_palindromes(w, alpha, opts);
    bool ok = true;
    auto word_text = [&] {
        std::string s;
        for (std::int64_t i = 1; i <= w.size() && i <= 64; ++i) s += std::to_string(w[i]) + (i < w.size() ? " " : "");
        if (w.size() > 64) s += " ...";
        return s;
    };
    if (use_oracle) {
        const auto br = brute_repeats(w, alpha, cfg.min_gap, cfg.oracle_limit);
        const auto bp = brute_palindromes(w, alpha, cfg.min_gap, cfg.oracle_limit);
        if (br != reps) {
            ok = false;
            log << "repeat mismatch on [" << word_text() << "]: finder " << reps.size() << ", oracle " << br.size()
                << "\n";
        }
        if (bp != pals) {
            ok = false;
            log << "palindrome mismatch on [" << word_text() << "]: finder " << pals.size() << ", oracle "
                << bp.size() << "\n";
        }
    }
    const auto runs = compute_runs(w);
    const BoundsReport rep = verify_bounds(w, alpha, reps, pals, runs);
    if (!rep.all_ok()) {
        ok = false;
        log << "bound violated on [" << word_text() << "]: repeats=" << rep.repeat_count
            << " palindromes=" << rep.palindrome_count << " E=" << format_rational(rep.exponent_sum) << "\n";
    }
    if (alpha.num() > alpha.den()) {
        const RunIndex index(w.size(), runs);
        const auto cr = check_cover_disjointness(aperiodic_only(reps, index, kRepeatBeta), alpha, kRepeatBeta);
        const auto cp =
            check_cover_disjointness(aperiodic_only(pals, index, kPalindromeBeta), alpha, kPalindromeBeta);
        for (const auto* c : {&cr, &cp}) {
            if (c->disjoint) continue;
            ok = false;
            log << "cover overlap on [" << word_text() << "]: (" << c->witness->first.x << "," << c->witness->first.y
                << ") and (" << c->witness->second.x << "," << c->witness->second.y << ")\n";
        }
    }
    return ok;
}

int cmd_verify(const Config& cfg) {
    const Alpha alpha = Alpha::parse(cfg.alpha);
    std::ostringstream log;
    std::size_t words = 0, failed = 0;
    auto check = [&](const Word& w, bool oracle) {
        ++words;
        if (!verify_word(w, alpha, cfg, oracle, log)) ++failed;
    };
    if (cfg.exhaustive_binary >= 0) {
        if (cfg.exhaustive_binary > 24) throw UsageError("--exhaustive-binary is limited to 24");
        for (int len = 0; len <= cfg.exhaustive_binary; ++len) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
                std::vector<std::int64_t> v(static_cast<std::size_t>(len));
                for (int i = 0; i < len; ++i) v[i] = (mask >> i) & 1;
                check(Word::from_ints(v), true);
            }
        }
    } else if (cfg.random_words > 0) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::int64_t> len_dist(1, std::max<std::int64_t>(1, cfg.max_length));
        std::uniform_int_distribution<int> letter(0, std::max(1, cfg.alphabet) - 1);
        for (int k = 0; k < cfg.random_words; ++k) {
            std::vector<std::int64_t> v(static_cast<std::size_t>(len_dist(rng)));
            for (auto& x : v) x = letter(rng);
            const Word w = Word::from_ints(v);
            check(w, static_cast<std::size_t>(w.size()) <= cfg.oracle_limit);
        }
    } else {
        const Word w = load(cfg);
        const bool oracle = static_cast<std::size_t>(w.size()) <= cfg.oracle_limit;
        if (!oracle) std::cout << "oracle skipped: n=" << w.size() << " exceeds limit " << cfg.oracle_limit << "\n";
        check(w, oracle);
    }
    std::cout << log.str();
    std::cout << (failed ? "FAIL" : "OK") << ": " << words << " word(s), " << failed << " failure(s), alpha="
              << alpha.to_string() << " min-gap=" << cfg.min_gap << "\n";
    return failed ? kVerifyFailed : kOk;
}

int cmd_bench(const Config& cfg) {
    const Alpha alpha = Alpha::parse(cfg.alpha);
    if (cfg.kind != "repeats" && cfg.kind != "palindromes") throw UsageError("--kind must be repeats or palindromes");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> letter(0, std::max(1, cfg.alphabet) - 1);
    const auto opts = finder_options(cfg);
    std::printf("%10s %12s %8s %12s\n", "n", "median_s", "ratio", "count");
    double prev = 0;
    for (std::int64_t n : cfg.sizes) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = letter(rng);
        const Word w = Word::from_ints(v);
        std::vector<double> times;
        std::size_t count = 0;
        for (int r = 0; r < std::max(1, cfg.reps); ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            count = cfg.kind == "repeats" ? find_all_repeats(w, alpha, opts).size()
                                          : find_all_palindromes(w, alpha, opts).size();
            times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        }
        std::sort(times.begin(), times.end());
        const double med = times[times.size() / 2];
        if (prev > 0) std::printf("%10lld %12.4f %8.3f %12zu\n", static_cast<long long>(n), med, med / prev, count);
        else std::printf("%10lld %12.4f %8s %12zu\n", static_cast<long long>(n), med, "-", count);
        prev = med;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal alpha-gapped repeats and palindromes"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "alpha >= 1 as decimal (1.5) or fraction (3/2)")->required();
        sub->add_option("--min-gap", cfg.min_gap, "minimum gap length")->check(CLI::IsMember({0, 1}));
        sub->add_option("--input", cfg.input, "input file (default stdin)");
        sub->add_option("--format", cfg.format, "bytes or ints")->check(CLI::IsMember({"bytes", "ints"}));
        sub->add_option("--output", cfg.output, "output file (default stdout)");
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 256));
        sub->add_option("--seed", cfg.seed, "random seed");
    };

    auto* rep = app.add_subcommand("find-repeats", "list maximal alpha-gapped repeats");
    auto* pal = app.add_subcommand("find-palindromes", "list maximal alpha-gapped palindromes");
    auto* stats = app.add_subcommand("stats", "counts, bound and run statistics");
    auto* ver = app.add_subcommand("verify", "check the finders against oracles and bounds");
    auto* bench = app.add_subcommand("bench", "wall-clock scaling table");
    for (auto* s : {rep, pal, stats, ver, bench}) add_common(s);
    ver->add_option("--exhaustive-binary", cfg.exhaustive_binary, "all binary words up to this length");
    ver->add_option("--random", cfg.random_words, "number of random words");
    ver->add_option("--max-length", cfg.max_length, "longest random word");
    ver->add_option("--alphabet", cfg.alphabet, "random alphabet size");
    ver->add_option("--oracle-limit", cfg.oracle_limit, "largest n checked against the oracles");
    bench->add_option("--sizes", cfg.sizes, "word lengths")->delimiter(',');
    bench->add_option("--reps", cfg.reps, "repetitions per size");
    bench->add_option("--alphabet", cfg.alphabet, "alphabet size");
    bench->add_option("--kind", cfg.kind, "repeats or palindromes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (rep->parsed()) return cmd_find(cfg, false);
        if (pal->parsed()) return cmd_find(cfg, true);
        if (stats->parsed()) return cmd_stats(cfg);
        if (ver->parsed()) return cmd_verify(cfg);
        if (bench->parsed()) return cmd_bench(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
