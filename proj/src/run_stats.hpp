#ifndef ACSF_RUN_STATS_HPP
#define ACSF_RUN_STATS_HPP

#include <optional>
#include <vector>

#include "bigmath.hpp"
#include "word.hpp"

namespace acsf {

// Pr(longest success run <= x in n Bernoulli(p) trials), exact.
// Tabulated from the conditioning-on-the-first-failure recursion with base
// Pr(R_m <= x) = 1 for m <= x; for x < 0 the probability is 0 (1 if n = 0).
Rational longest_run_cdf(int n, int x, const Rational& p);

// probability that some unary run of length >= 2 exists: 1 - ((b-1)/b)^(n-1)
Rational p_unary_adjacent(int n, int b);

// The union-style estimate coefficient * s^r * b^(n-r) / b^n. The default
// coefficient is the number C(b,s) of comparable valences; pass an explicit
// one to reproduce other published constants.
Rational run_union_estimate(int n, int b, int s, int r,
                            std::optional<BigInt> coefficient = std::nullopt);

// exact probability that some size-s valence carries a run of length >= r,
// by exhaustive enumeration; requires b^n <= 10^6
Rational exact_any_valence_run_prob(int n, int b, int s, int r);

struct PValueReport {
    int n = 0;
    int b = 0;
    Valence valence;
    int run_length = 0;
    int position = 0;            // leftmost start of a longest run
    Rational raw_p;              // Pr(run of length >= r in this valence)
    BigInt adjustment;           // number of comparable valences, C(b,s)
    Rational adjusted_p;         // min(1, adjustment * raw_p)
    std::optional<Rational> exact_any_valence_p; // exhaustive, when feasible
    Rational threshold;
    bool reject = false;         // adjusted_p < threshold
};

// p-value of the event "some run of length >= r over a size-|v| valence",
// Bonferroni-adjusted across the C(b,|v|) comparable valences. The
// exhaustive any-valence probability is attached whenever b^n <= 10^6.
PValueReport run_event_pvalue(int n, int b, Valence valence, int r,
                              const Rational& threshold = Rational(1, 20),
                              bool attach_exhaustive = true);

enum class AlphabetEvent {
    binary_any,    // string lies in some 2-element alphabet
    binary_fixed,  // string lies in {0,1}
    ary_minus_one, // string misses at least one symbol
};

Rational prob_restricted_alphabet(int n, int a, AlphabetEvent event);

// least n with prob_restricted_alphabet(n, a, binary_any) < alpha
int min_threshold_n(int a, const Rational& alpha);

struct BestModelReport {
    std::vector<PValueReport> events; // one per proper valence with a run
    int best_index = -1;              // -1 when there is no candidate event
    bool reject = false;
    int model_states = 0; // single-run automaton behind the best event
    int model_m = 0;      // least m with s^r <= b^m
    Rational threshold;
};

// Scores every (proper valence, longest run) event and selects the one
// with the smallest adjusted p-value; ties go to the longer run, then the
// smaller valence, then the earlier position. reject is false when the
// minimum does not beat alpha (null model: arbitrary b-ary string).
BestModelReport best_model(const Word& w, const Rational& alpha = Rational(1, 20));

} // namespace acsf

#endif
