#include "run_models.hpp"

#include <algorithm>

namespace acsf {

namespace {

// sum over (y_1..y_l) >= 0 with sum y_i = budget of prod sizes[i]^{y_i}
BigInt composition_count(const std::vector<int>& sizes, int budget) {
    std::vector<BigInt> f(static_cast<size_t>(budget) + 1, 0);
    f[0] = 1;
    for (int s : sizes) {
        std::vector<BigInt> g(static_cast<size_t>(budget) + 1);
        g[0] = f[0];
        for (int t = 1; t <= budget; ++t)
            g[static_cast<size_t>(t)] = f[static_cast<size_t>(t)] + s * g[static_cast<size_t>(t) - 1];
        f = std::move(g);
    }
    return f[static_cast<size_t>(budget)];
}

struct PoolRun {
    Run run;
    int size; // valence size
};

// Two selected runs touching end-to-start must donate one symbol to the
// forward edge between their loop states, so a selection's usable loop
// budget is the total length minus one per touching pair.
MultiRunDecision decide_over_pool(const std::vector<PoolRun>& pool, int n, int b, int m, int q) {
    int budget = n + 1 - q;
    BigInt allowance = big_pow(b, static_cast<unsigned long>(m));

    if (budget <= 0) return {true, {}}; // bare chain, one accepted string

    int max_loops = std::min(q, budget);
    size_t psize = pool.size();
    std::vector<int> suffix_longest(psize + 1, 0);
    for (size_t i = psize; i-- > 0;)
        suffix_longest[i] = std::max(suffix_longest[i + 1], pool[i].run.length);

    struct Pick {
        size_t idx;
        bool shaved; // touched the previous selection, front symbol donated
    };
    std::vector<Pick> picked;
    MultiRunDecision result;

    auto evaluate = [&]() {
        std::vector<int> sizes;
        RunSelection sel;
        int total = 0;
        for (const Pick& pick : picked) {
            Run r = pool[pick.idx].run;
            if (pick.shaved) {
                ++r.start;
                --r.length;
            }
            sizes.push_back(pool[pick.idx].size);
            sel.items.emplace_back(r, r.valence);
            total += r.length;
        }
        if (composition_count(sizes, budget) > allowance) return false;
        // shorten runs, rightmost first, down to the exact loop budget
        int excess = total - budget;
        for (auto it = sel.items.rbegin(); it != sel.items.rend() && excess > 0; ++it) {
            int cut = std::min(excess, it->first.length - 1);
            it->first.length -= cut;
            excess -= cut;
        }
        result.ok = true;
        result.witness = std::move(sel);
        return true;
    };

    // iterative deepening on the loop count gives the fewest-loops witness,
    // and the index-ordered DFS the lexicographically earliest starts
    for (int target = 1; target <= max_loops; ++target) {
        auto dfs = [&](auto&& self, size_t idx, int prev_end, int count, int usable) -> bool {
            if (count == target) return usable >= budget && evaluate();
            if (usable >= budget) return false; // a smaller target already covered this
            for (size_t j = idx; j < psize; ++j) {
                if (prev_end >= 0 && pool[j].run.start < prev_end) continue;
                if (usable + (target - count) * suffix_longest[j] < budget) break;
                bool shaved = prev_end >= 0 && pool[j].run.start == prev_end;
                int gain = pool[j].run.length - (shaved ? 1 : 0);
                if (gain < 1) continue;
                picked.push_back({j, shaved});
                bool done = self(self, j + 1, pool[j].run.end(), count + 1, usable + gain);
                picked.pop_back();
                if (done) return true;
            }
            return false;
        };
        if (dfs(dfs, 0, -1, 0, 0)) return result;
    }
    return {false, {}};
}

std::vector<PoolRun> full_pool(const Word& w) {
    std::vector<PoolRun> pool;
    for (Valence v : every_valence(w.alphabet_size))
        for (const Run& r : maximal_runs(w, v)) pool.push_back({r, v.size()});
    std::sort(pool.begin(), pool.end(), [](const PoolRun& a, const PoolRun& b) {
        return std::tie(a.run.start, a.size, a.run.valence.mask, a.run.length) <
               std::tie(b.run.start, b.size, b.run.valence.mask, b.run.length);
    });
    return pool;
}

void check_decide_args(const Word& w, int m, int q) {
    if (m < 0 || m > w.size()) throw_invalid("InvalidArgument: m must lie in [0, n]");
    if (q < 1) throw_invalid("InvalidArgument: q must be >= 1");
}

} // namespace

int RunSelection::total_loop_length() const {
    int total = 0;
    for (auto& [run, valence] : items) total += run.length;
    return total;
}

BigInt selection_count(const RunSelection& sel, int n, int b) {
    (void)b; // the count depends only on the loop valence sizes
    int prev_end = -1;
    std::vector<int> sizes;
    for (auto& [run, valence] : sel.items) {
        if (run.length < 1 || run.start < 0 || run.end() > n)
            throw_invalid("InvalidSelection: run outside the word");
        if (prev_end >= 0 && run.start < prev_end)
            throw_invalid("OverlappingRuns: selected runs must be disjoint and ordered");
        if (prev_end >= 0 && run.start == prev_end)
            throw_invalid("InvalidSelection: touching runs need a separating forward symbol");
        prev_end = run.end();
        sizes.push_back(valence.size());
    }
    int total = sel.total_loop_length();
    if (total > n) throw_invalid("InvalidSelection: loop lengths exceed the word length");
    return composition_count(sizes, total);
}

MultiRunDecision multi_run_decide(const Word& w, int m, int q) {
    check_decide_args(w, m, q);
    return decide_over_pool(full_pool(w), w.size(), w.alphabet_size, m, q);
}

bool multi_run_binary_criterion(const Word& w, int m, int q) {
    check_decide_args(w, m, q);
    if (w.alphabet_size > 2) throw_invalid("InvalidAlphabet: criterion needs a binary word");
    int n = w.size();
    int budget = n + 1 - q;
    if (budget <= 0) return true;
    BigInt allowance = big_pow(2, static_cast<unsigned long>(m));

    // one loop over the whole alphabet covers any stretch of the word
    if (big_pow(w.alphabet_size, static_cast<unsigned long>(budget)) <= allowance) return true;

    // Unary maximal runs partition a binary word, so consecutive runs
    // always touch; selecting both costs one separator symbol. For l
    // unary loops the string count is the composition number, so the
    // criterion is a usable-length maximization per l plus one binomial
    // comparison.
    std::vector<int> lengths;
    {
        int i = 0;
        while (i < n) {
            int j = i;
            while (j < n && w[j] == w[i]) ++j;
            lengths.push_back(j - i);
            i = j;
        }
    }
    int t = static_cast<int>(lengths.size());
    int max_loops = std::min(q, budget);
    constexpr int kNone = -1000000;
    // best[l][0]: run i skipped, best[l][1]: run i selected
    std::vector<std::array<int, 2>> best(static_cast<size_t>(max_loops) + 1, {kNone, kNone});
    best[0][0] = 0;
    for (int i = 0; i < t; ++i) {
        std::vector<std::array<int, 2>> next(static_cast<size_t>(max_loops) + 1, {kNone, kNone});
        for (int l = 0; l <= max_loops; ++l)
            for (int sel = 0; sel < 2; ++sel) {
                int cur = best[static_cast<size_t>(l)][sel];
                if (cur == kNone) continue;
                next[static_cast<size_t>(l)][0] = std::max(next[static_cast<size_t>(l)][0], cur);
                if (l < max_loops) {
                    int gain = lengths[static_cast<size_t>(i)] - (sel ? 1 : 0);
                    if (gain >= 1)
                        next[static_cast<size_t>(l) + 1][1] =
                            std::max(next[static_cast<size_t>(l) + 1][1], cur + gain);
                }
            }
        best = std::move(next);
    }
    for (int l = 1; l <= max_loops; ++l) {
        int usable = std::max(best[static_cast<size_t>(l)][0], best[static_cast<size_t>(l)][1]);
        if (usable < budget) continue;
        if (binomial(budget + l - 1, l - 1) <= allowance) return true;
    }
    return false;
}

StructureFunction multi_run_sf(const Word& w) {
    int n = w.size();
    bool binary = w.alphabet_size <= 2;
    StructureFunction sf{SfClass::multi_run, std::vector<int>(static_cast<size_t>(n) + 1, 0)};
    int upper = n + 1; // h(0) <= n+1 via the bare chain
    for (int m = 0; m <= n; ++m) {
        int h = upper;
        for (int q = 1; q < upper; ++q) {
            bool ok = binary ? multi_run_binary_criterion(w, m, q) : multi_run_decide(w, m, q).ok;
            if (ok) {
                h = q;
                break;
            }
        }
        sf.values[static_cast<size_t>(m)] = h;
        upper = h; // nonincreasing in m
    }
    return sf;
}

std::vector<MultiRunDecision> multi_run_witnesses(const Word& w) {
    StructureFunction sf = multi_run_sf(w);
    std::vector<MultiRunDecision> out;
    for (int m = 0; m <= w.size(); ++m)
        out.push_back(multi_run_decide(w, m, sf.at(m)));
    return out;
}

namespace {

struct ValenceLongest {
    Valence valence;
    int size;
    int longest;   // longest maximal run, 0 when the symbol set never occurs
    int first_start; // start of the leftmost run of that length
};

std::vector<ValenceLongest> longest_runs_by_valence(const Word& w) {
    std::vector<ValenceLongest> out;
    for (Valence v : every_valence(w.alphabet_size)) {
        ValenceLongest e{v, v.size(), 0, 0};
        for (const Run& r : maximal_runs(w, v)) {
            if (r.length > e.longest) {
                e.longest = r.length;
                e.first_start = r.start;
            }
        }
        out.push_back(e);
    }
    return out;
}

} // namespace

StructureFunction single_run_sf(const Word& w) {
    int n = w.size();
    int b = w.alphabet_size;
    auto valences = longest_runs_by_valence(w);
    StructureFunction sf{SfClass::single_run, std::vector<int>(static_cast<size_t>(n) + 1, 0)};
    for (int m = 0; m <= n; ++m) {
        BigInt allowance = big_pow(b, static_cast<unsigned long>(m));
        int best_r = 0;
        for (const auto& e : valences) {
            int r;
            if (e.size == 1) {
                r = e.longest;
            } else {
                r = 0;
                BigInt p = 1;
                while (r < e.longest && p * e.size <= allowance) {
                    p *= e.size;
                    ++r;
                }
            }
            best_r = std::max(best_r, r);
        }
        sf.values[static_cast<size_t>(m)] = n + 1 - best_r;
    }
    return sf;
}

std::vector<SingleRunWitness> single_run_witnesses(const Word& w) {
    int n = w.size();
    int b = w.alphabet_size;
    auto valences = longest_runs_by_valence(w);
    std::sort(valences.begin(), valences.end(), [](const auto& a, const auto& b) {
        return std::tie(a.size, a.valence.mask) < std::tie(b.size, b.valence.mask);
    });
    std::vector<SingleRunWitness> out;
    for (int m = 0; m <= n; ++m) {
        BigInt allowance = big_pow(b, static_cast<unsigned long>(m));
        SingleRunWitness best;
        int best_r = 0;
        for (const auto& e : valences) {
            int r;
            if (e.size == 1) {
                r = e.longest;
            } else {
                r = 0;
                BigInt p = 1;
                while (r < e.longest && p * e.size <= allowance) {
                    p *= e.size;
                    ++r;
                }
            }
            if (r > best_r) {
                best_r = r;
                best.run = Run{e.first_start, r, e.valence};
            }
        }
        best.states = n + 1 - best_r;
        out.push_back(best);
    }
    return out;
}

} // namespace acsf
