#ifndef ACSF_EXACT_SEARCH_HPP
#define ACSF_EXACT_SEARCH_HPP

#include <optional>
#include <vector>

#include "bigmath.hpp"
#include "nfa.hpp"
#include "sf.hpp"
#include "word.hpp"

namespace acsf {

// Word-length ceilings for the exhaustive automaton search.
struct SearchLimits {
    int max_n_b2 = 10;
    int max_n_b3 = 8;
    int max_n_other = 6;

    int limit_for(int alphabet_size) const {
        if (alphabet_size <= 1) return 64;
        if (alphabet_size == 2) return max_n_b2;
        if (alphabet_size == 3) return max_n_b3;
        return max_n_other;
    }
};

inline int hyde_bound(int n) { return n / 2 + 1; }

// minimum of |L(M) ∩ Σ^n| over all NFAs with at most k states accepting w,
// for each k = 1..k_max (index k; index 0 is unused and set to 0).
//
// The search enumerates canonical accepting paths: state sequences
// q_0..q_n with states named in first-visit order, inducing the NFA whose
// transitions are exactly the path edges and whose sole accepting state is
// q_n. Any witness prunes to this form without gaining strings.
std::vector<BigInt> min_count_per_k(const Word& w, int k_max, const SearchLimits& limits = {});

StructureFunction exact_h(const Word& w, const SearchLimits& limits = {});

// least k admitting a k-state NFA that accepts w via a unique accepting
// path of length |w| (checked as: one accepted string and one path).
int automatic_complexity(const Word& w, const SearchLimits& limits = {});

// hyde_bound(n) - automatic_complexity(w), always >= 0
int deficiency(const Word& w, const SearchLimits& limits = {});

// g_w(m) = h_w(n-m), searched with at most m+1 states.
int g_of(const Word& w, int m, const SearchLimits& limits = {});

struct GTable {
    int n = 0;
    int b = 2;
    std::vector<int> entries;      // G_n(m) for m = 0..m_max
    std::vector<Word> maximizers;  // first word attaining each maximum
};

// G_n(m) = max over all b^n words of g_w(m), for m = 0..m_max.
GTable g_table(int n, int m_max, int b, const SearchLimits& limits = {});

// A minimizing automaton behind h_w(m): h_w(m) states, at most b^m strings.
Nfa exact_witness(const Word& w, int m, const SearchLimits& limits = {});

// A unique-path witness with automatic_complexity(w) states.
Nfa a_n_witness(const Word& w, const SearchLimits& limits = {});

} // namespace acsf

#endif
