#include <doctest.h>

#include <algorithm>
#include <random>

#include "run_stats.hpp"

using namespace acsf;

namespace {

// enumeration oracle: longest run of symbols < s over all b^n words
Rational oracle_run_cdf(int n, int x, int b, int s) {
    uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<uint64_t>(b);
    uint64_t good = 0;
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        int longest = 0, run = 0;
        for (int i = 0; i < n; ++i) {
            int sym = static_cast<int>(c % static_cast<uint64_t>(b));
            c /= static_cast<uint64_t>(b);
            run = sym < s ? run + 1 : 0;
            longest = std::max(longest, run);
        }
        if (longest <= x) ++good;
    }
    return Rational(good, total);
}

} // namespace

TEST_CASE("run cdf base cases") {
    CHECK(longest_run_cdf(3, 5, Rational(1, 2)) == 1);
    CHECK(longest_run_cdf(0, -1, Rational(1, 2)) == 1);
    CHECK(longest_run_cdf(4, -1, Rational(1, 2)) == 0);
    CHECK(longest_run_cdf(4, 3, Rational(1, 2)) == Rational(15, 16)); // 1 - p^n at n = x+1
    CHECK_THROWS_AS(longest_run_cdf(4, 1, Rational(3, 2)), Error);
}

TEST_CASE("run cdf equals the 27-string enumeration") {
    CHECK(longest_run_cdf(3, 1, Rational(1, 3)) == Rational(22, 27));
    CHECK(longest_run_cdf(3, 1, Rational(1, 3)) == oracle_run_cdf(3, 1, 3, 1));
}

TEST_CASE("run cdf equals enumeration for small lengths") {
    for (int b : {2, 3}) {
        for (int n = 1; n <= 9; ++n) {
            for (int s = 1; s <= b; ++s) {
                for (int x = 0; x <= n; ++x) {
                    CAPTURE(b);
                    CAPTURE(n);
                    CAPTURE(s);
                    CAPTURE(x);
                    CHECK(longest_run_cdf(n, x, Rational(s, b)) == oracle_run_cdf(n, x, b, s));
                }
            }
        }
    }
}

TEST_CASE("run cdf monotone in n and x") {
    Rational p(2, 3);
    for (int n = 1; n <= 10; ++n)
        for (int x = 0; x < 8; ++x) {
            CHECK(longest_run_cdf(n + 1, x, p) <= longest_run_cdf(n, x, p));
            CHECK(longest_run_cdf(n, x, p) <= longest_run_cdf(n, x + 1, p));
        }
}

TEST_CASE("adjacent-pair probabilities from the paper") {
    CHECK(p_unary_adjacent(3, 3) == Rational(5, 9));
    CHECK(p_unary_adjacent(10, 3) == Rational(19171, 19683)); // 1 - (2/3)^9, about 0.974
    CHECK(p_unary_adjacent(1, 5) == 0);
    CHECK(rational_to_decimal(p_unary_adjacent(10, 3)) == "0.973988");
}

TEST_CASE("union estimates with both coefficients") {
    // the printed constant 6 gives 0.790123...
    Rational printed = run_union_estimate(10, 3, 2, 5, BigInt(6));
    CHECK(printed == Rational(46656, 59049));
    double d = printed.convert_to<double>();
    CHECK(d == doctest::Approx(0.7901).epsilon(1e-4));

    // the valence-count default C(3,2) = 3
    CHECK(run_union_estimate(10, 3, 2, 5) == Rational(32, 81));

    // a full-length window stays a probability bound
    CHECK(run_union_estimate(8, 3, 2, 8) <= 1);
}

TEST_CASE("run event p-values") {
    PValueReport unary = run_event_pvalue(3, 3, Valence::of({0}), 2);
    CHECK(unary.raw_p == Rational(5, 27));
    CHECK(unary.adjustment == 3);
    CHECK(unary.adjusted_p == Rational(5, 9));
    // the Bonferroni adjustment bounds the exact any-valence probability
    REQUIRE(unary.exact_any_valence_p.has_value());
    CHECK(*unary.exact_any_valence_p == Rational(5, 9));
    CHECK(unary.adjusted_p >= *unary.exact_any_valence_p);

    PValueReport binary = run_event_pvalue(3, 3, Valence::of({0, 1}), 3);
    CHECK(binary.raw_p == Rational(8, 27));
    REQUIRE(binary.exact_any_valence_p.has_value());
    CHECK(*binary.exact_any_valence_p == Rational(7, 9)); // 1 - (3/3)(2/3)(1/3)
}

TEST_CASE("exact any-valence probability by enumeration") {
    CHECK(exact_any_valence_run_prob(3, 3, 2, 3) == Rational(7, 9));
    CHECK(exact_any_valence_run_prob(3, 3, 1, 2) == Rational(5, 9));
}

TEST_CASE("restricted alphabet probabilities") {
    CHECK(prob_restricted_alphabet(11, 3, AlphabetEvent::binary_any) == Rational(2047, 59049));
    CHECK(prob_restricted_alphabet(6, 4, AlphabetEvent::binary_fixed) ==
          Rational(big_pow(2, 6), big_pow(4, 6)));
    for (int n = 1; n <= 8; ++n)
        CHECK(prob_restricted_alphabet(n, 3, AlphabetEvent::binary_any) ==
              prob_restricted_alphabet(n, 3, AlphabetEvent::ary_minus_one));
    CHECK_THROWS_AS(prob_restricted_alphabet(4, 1, AlphabetEvent::binary_any), Error);
}

TEST_CASE("binary-any probability equals exhaustive counting") {
    for (int a = 2; a <= 5; ++a) {
        for (int n = 1; n <= 6; ++n) {
            uint64_t total = 1;
            for (int i = 0; i < n; ++i) total *= static_cast<uint64_t>(a);
            uint64_t hits = 0;
            for (uint64_t code = 0; code < total; ++code) {
                uint64_t c = code;
                uint32_t used = 0;
                for (int i = 0; i < n; ++i) {
                    used |= 1u << (c % static_cast<uint64_t>(a));
                    c /= static_cast<uint64_t>(a);
                }
                if (__builtin_popcount(used) <= 2) ++hits;
            }
            CHECK(prob_restricted_alphabet(n, a, AlphabetEvent::binary_any) ==
                  Rational(hits, total));
        }
    }
}

TEST_CASE("threshold lengths from the paper") {
    Rational fisher(1, 20);
    CHECK(min_threshold_n(3, fisher) == 11);
    CHECK(min_threshold_n(4, fisher) == 7);
    CHECK(min_threshold_n(5, fisher) == 6);
    // the exact comparisons behind them
    CHECK(prob_restricted_alphabet(11, 3, AlphabetEvent::binary_any) < fisher);
    CHECK(prob_restricted_alphabet(10, 3, AlphabetEvent::binary_any) >= fisher);
    CHECK(prob_restricted_alphabet(7, 4, AlphabetEvent::binary_any) == Rational(760, 16384));
    CHECK(prob_restricted_alphabet(6, 5, AlphabetEvent::binary_any) == Rational(625, 15625));
}

TEST_CASE("missing-symbol probability vanishes monotonically") {
    for (int a = 3; a <= 5; ++a) {
        Rational prev = prob_restricted_alphabet(2, a, AlphabetEvent::ary_minus_one);
        for (int n = 3; n <= 40; ++n) {
            Rational cur = prob_restricted_alphabet(n, a, AlphabetEvent::ary_minus_one);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("model selection on the ternary example") {
    BestModelReport report = best_model(parse_word("1010020210", 3));
    REQUIRE(report.best_index >= 0);
    const PValueReport& best = report.events[static_cast<size_t>(report.best_index)];
    CHECK(best.valence.size() == 2);
    CHECK(best.run_length == 5);
    CHECK(best.position == 0);
    CHECK(report.model_states == 6); // n + 1 - 5
    CHECK(report.model_m == 4);      // least m with 2^5 <= 3^m
}

TEST_CASE("model selection keeps the null model for 001") {
    BestModelReport report = best_model(parse_word("001", 3));
    CHECK_FALSE(report.reject);
    REQUIRE(report.best_index >= 0);
    CHECK(report.events[static_cast<size_t>(report.best_index)].adjusted_p == Rational(5, 9));
}

TEST_CASE("a long binary string rejects the ternary null") {
    BestModelReport report = best_model(parse_word("00000000000", 3));
    CHECK(report.reject);
    const PValueReport& best = report.events[static_cast<size_t>(report.best_index)];
    CHECK(best.adjusted_p < Rational(1, 20));
    CHECK(best.adjusted_p <= Rational(2047, 59049));
}

TEST_CASE("verdicts are invariant under symbol relabeling") {
    std::mt19937 rng(31u);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8u);
        std::vector<Symbol> syms;
        for (int i = 0; i < n; ++i) syms.push_back(static_cast<Symbol>(rng() % 3u));
        Word w(syms, 3);
        BestModelReport base = best_model(w);

        std::vector<Symbol> perm{1, 2, 0};
        std::vector<Symbol> relabeled;
        for (Symbol s : syms) relabeled.push_back(perm[static_cast<size_t>(s)]);
        BestModelReport other = best_model(Word(relabeled, 3));

        CHECK(base.reject == other.reject);
        REQUIRE(base.events.size() == other.events.size());
        std::vector<Rational> lhs, rhs;
        for (auto& e : base.events) lhs.push_back(e.adjusted_p);
        for (auto& e : other.events) rhs.push_back(e.adjusted_p);
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("probabilities stay inside [0,1] and adjustment only grows") {
    std::mt19937 rng(37u);
    for (int trial = 0; trial < 60; ++trial) {
        int b = 2 + static_cast<int>(rng() % 3u);
        int n = 1 + static_cast<int>(rng() % 10u);
        int s = 1 + static_cast<int>(rng() % static_cast<uint32_t>(b));
        int r = 1 + static_cast<int>(rng() % static_cast<uint32_t>(n));
        auto vs = all_valences(b, s);
        PValueReport ev = run_event_pvalue(n, b, vs[rng() % vs.size()], r);
        CHECK(ev.raw_p >= 0);
        CHECK(ev.raw_p <= 1);
        CHECK(ev.adjusted_p >= ev.raw_p);
        CHECK(ev.adjusted_p <= 1);
        if (ev.exact_any_valence_p) CHECK(ev.adjusted_p >= *ev.exact_any_valence_p);
    }
}
