#include <doctest.h>

#include <random>

#include "gapped/lce.hpp"
#include "gapped/range_min.hpp"
#include "oracles.hpp"

using namespace gapped;

TEST_SUITE("lce") {

TEST_CASE("range minimum") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 700;
        std::vector<std::int32_t> v(n);
        for (auto& x : v) x = static_cast<std::int32_t>(rng() % (t % 2 ? 5 : 1000));
        const RangeMin rm(v);
        for (int q = 0; q < 500; ++q) {
            std::size_t l = rng() % n, r = rng() % n;
            if (l > r) std::swap(l, r);
            CHECK(rm.query(l, r) == *std::min_element(v.begin() + l, v.begin() + r + 1));
        }
    }
}

TEST_CASE("fixed values") {
    const LceOracle aaaa(Word::from_string("aaaa"));
    CHECK(aaaa.lce(1, 2) == 3);
    CHECK(aaaa.lce(1, 1) == 4);
    const LceOracle abaab(Word::from_string("abaab"));
    CHECK(abaab.lce(1, 4) == 2);
    CHECK(abaab.lcs(2, 5) == 2);
    CHECK(abaab.longest_periodic_extension(3, 1) == 4);
    const LceOracle abcba(Word::from_string("abcba"));
    CHECK(abcba.palindromic_extension(2, 4) == 2);
    CHECK(abcba.palindromic_extension(1, 3) == 0);
    CHECK(LceOracle(Word::from_string("ababab")).longest_periodic_extension(1, 2) == 6);
    CHECK(LceOracle(Word::from_string("abc")).longest_periodic_extension(1, 7) == 3);
}

TEST_CASE("argument checks") {
    const LceOracle o(Word::from_string("abc"));
    CHECK_THROWS_AS(o.lce(0, 1), std::out_of_range);
    CHECK_THROWS_AS(o.lce(1, 4), std::out_of_range);
    CHECK_THROWS_AS(o.lcs(1, 4), std::out_of_range);
    CHECK_THROWS_AS(o.palindromic_extension(2, 2), std::out_of_range);
    CHECK_THROWS_AS(o.longest_periodic_extension(1, 0), std::out_of_range);
}

TEST_CASE("random queries agree with naive scans") {
    std::mt19937_64 rng(42);
    int queries = 0;
    for (int t = 0; queries < 10000; ++t) {
        const Word w = oracle::random_word(rng, 1 + static_cast<std::int64_t>(rng() % 200), 1 + t % 4);
        const LceOracle o(w);
        const std::int64_t n = w.size();
        for (int q = 0; q < 100; ++q, ++queries) {
            const std::int64_t i = 1 + static_cast<std::int64_t>(rng() % n);
            const std::int64_t j = 1 + static_cast<std::int64_t>(rng() % n);
            CHECK(o.lce(i, j) == oracle::lce(w, i, j));
            CHECK(o.lcs(i, j) == oracle::lcs(w, i, j));
            CHECK(o.lce_u(i, j) == oracle::lce(w, i, j));
            CHECK(o.lcs_u(i, j) == oracle::lcs(w, i, j));
            const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % n);
            CHECK(o.longest_periodic_extension(i, p) == oracle::lpe(w, i, p));
            CHECK(o.lpe_u(i, p) == oracle::lpe(w, i, p));
            if (i < j) {
                CHECK(o.palindromic_extension(i, j) == oracle::palext(w, i, j));
                std::int64_t k = 0;
                while (i + k <= n && j - k >= 1 && w[i + k] == w[j - k]) ++k;
                CHECK(o.inward_u(i, j) == k);
            }
            // Start of the longest p-periodic factor ending at j.
            std::int64_t s = j;
            while (s > 1 && oracle::has_period(w, s - 1, j, p)) --s;
            CHECK(o.lpe_back_u(j, p) == s);
        }
    }
}

}  // TEST_SUITE
