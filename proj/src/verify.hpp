#ifndef ACSF_VERIFY_HPP
#define ACSF_VERIFY_HPP

#include <string>
#include <vector>

#include "exact_search.hpp"

namespace acsf {

struct CheckResult {
    std::string name;
    bool pass = true;
    bool theorem = true; // false: conjecture evidence; a failure is not a bug
    long long cases = 0;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes; // evidence tables, trend rows
};

int theorem_violations(const VerifyReport& report);

// Exhaustive binary check of the proven structure-function inequalities
// (monotonicity, bounds, uniqueness equivalence, extension and g-chain
// inequalities, class ordering) over all words of length <= max_n, with
// extensions of length <= 2.
VerifyReport verify_inequalities(int max_n, const SearchLimits& limits = {});

// G_n(k) tables with the proven shift inequality and conjecture evidence.
VerifyReport verify_gn(int max_n, int max_k, const SearchLimits& limits = {});

// Independent-oracle equivalences: canonical search vs unrestricted NFA
// brute force, subset counting vs string filtering, selection counting vs
// automaton counting, run-CDF recursion vs enumeration, greedy vs search
// decisions, spine automata, single-run class vs one-loop enumeration.
VerifyReport verify_oracles(const SearchLimits& limits = {});

} // namespace acsf

#endif
