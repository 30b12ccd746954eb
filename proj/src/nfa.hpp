#ifndef ACSF_NFA_HPP
#define ACSF_NFA_HPP

#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bigmath.hpp"
#include "word.hpp"

namespace acsf {

// An explicit NFA without epsilon transitions. Immutable once built.
class Nfa {
public:
    using Transition = std::tuple<int, Symbol, int>; // (from, symbol, to)

    Nfa(int state_count, int alphabet_size, int start, std::set<int> accepting,
        std::vector<Transition> transitions);

    int state_count() const { return state_count_; }
    int alphabet_size() const { return alphabet_size_; }
    int start() const { return start_; }
    const std::set<int>& accepting() const { return accepting_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    // targets of (state, symbol) as a bitmask; requires state_count <= 64
    uint64_t target_mask(int state, Symbol symbol) const;

private:
    int state_count_;
    int alphabet_size_;
    int start_;
    std::set<int> accepting_;
    std::vector<Transition> transitions_;             // sorted, deduplicated
    std::vector<uint64_t> target_masks_;              // [state * b + symbol]
};

// Number of accepting paths spelling exactly w (state sequences
// q_0 = start, ..., q_n in accepting). Exact, unbounded.
BigInt count_accepting_paths(const Nfa& m, const Word& w);

// Number of accepting paths of length n over any string.
BigInt count_accepting_paths_any(const Nfa& m, int n);

// |L(M) ∩ Σ^n|, by determinization restricted to reachable subsets.
// Counts strings, never paths. Requires state_count <= 64.
BigInt count_accepted_strings(const Nfa& m, int n);

// The odd-length witness automaton for the floor(n/2)+1 complexity bound:
// forward spine for the first half, one self-loop at the middle, return
// edges for the second half; start = accept = state 0.
Nfa build_kayleigh(const Word& x);

// Chain automaton for w where each selected run is collapsed to a single
// state carrying self-loops on every symbol of its paired valence.
// Runs must be disjoint, ordered by position, and lie inside w.
Nfa build_chain_with_loops(const Word& w,
                           std::span<const std::pair<Run, Valence>> selection);

// Chain of forward_count+1 states whose forward edges all carry
// forward_symbol and where every state loops on loop_valence. Accepts the
// length-n strings with exactly forward_count occurrences of
// forward_symbol and everything else inside loop_valence.
Nfa build_counting_chain(int forward_count, Symbol forward_symbol, Valence loop_valence,
                         int alphabet_size);

std::string nfa_to_json(const Nfa& m);

} // namespace acsf

#endif
