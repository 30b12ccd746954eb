#ifndef ACSF_RUN_MODELS_HPP
#define ACSF_RUN_MODELS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bigmath.hpp"
#include "sf.hpp"
#include "word.hpp"

namespace acsf {

// Disjoint runs of a word, each paired with the loop valence of the state
// it collapses to. Ordered by position.
struct RunSelection {
    std::vector<std::pair<Run, Valence>> items;

    int total_loop_length() const;
    int loop_count() const { return static_cast<int>(items.size()); }
};

// Exact number of length-n strings accepted by the chain automaton induced
// by the selection: the composition sum over loop budgets
// sum over (y_1..y_l), sum y_i = X, of prod |v_i|^{y_i}, where X is the
// selection's total loop length and the chain has q = n+1-X states.
// Selected runs must be separated by at least one forward symbol.
BigInt selection_count(const RunSelection& sel, int n, int b);

struct MultiRunDecision {
    bool ok = false;
    RunSelection witness; // separated and trimmed to the exact loop budget
};

// Whether the multi-run class achieves h_w(m) <= q, by searching disjoint
// subsets of the maximal runs over every valence. Runs touching
// end-to-start donate one symbol to the forward edge between their loop
// states, which shrinks the usable loop budget accordingly.
MultiRunDecision multi_run_decide(const Word& w, int m, int q);

// The polynomial-time decision for binary words: one full-alphabet loop,
// or unary loops chosen by a usable-length maximization over the run
// partition, tested against one binomial per loop count. Checked against
// multi_run_decide in the oracle suite.
bool multi_run_binary_criterion(const Word& w, int m, int q);

StructureFunction multi_run_sf(const Word& w);
std::vector<MultiRunDecision> multi_run_witnesses(const Word& w); // per m

// Best achievable with a chain plus at most one looping state. The loop
// may sit on any run over any valence (full-alphabet runs exist at every
// position, which yields the n-m+1 fallback inside the class).
StructureFunction single_run_sf(const Word& w);

struct SingleRunWitness {
    int states = 0;
    std::optional<Run> run; // trimmed; empty means the bare chain
};
std::vector<SingleRunWitness> single_run_witnesses(const Word& w); // per m

} // namespace acsf

#endif
