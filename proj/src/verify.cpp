#include "verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>

#include "entropy.hpp"
#include "run_models.hpp"
#include "run_stats.hpp"

namespace acsf {

namespace {

Word binary_word(uint32_t code, int n) {
    std::vector<Symbol> syms(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) syms[static_cast<size_t>(i)] = (code >> (n - 1 - i)) & 1u;
    return Word(std::move(syms), 2);
}

uint32_t reverse_code(uint32_t code, int n) {
    uint32_t out = 0;
    for (int i = 0; i < n; ++i) out |= ((code >> i) & 1u) << (n - 1 - i);
    return out;
}

std::string format(const char* fmt, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), fmt, args...);
    return buf;
}

struct Checker {
    CheckResult result;

    explicit Checker(std::string name, bool theorem = true) {
        result.name = std::move(name);
        result.theorem = theorem;
    }

    void expect(bool ok, const std::string& detail) {
        ++result.cases;
        if (!ok && result.pass) {
            result.pass = false;
            result.detail = detail;
        }
    }
};

// h tables for every binary word up to max_len. Reversal and symbol
// complement preserve the structure function, so only orbit minima are
// searched and the rest copied.
std::vector<std::vector<StructureFunction>> binary_h_table(int max_len,
                                                           const SearchLimits& limits) {
    std::vector<std::vector<StructureFunction>> table(static_cast<size_t>(max_len) + 1);
    for (int n = 0; n <= max_len; ++n) {
        auto& row = table[static_cast<size_t>(n)];
        row.resize(1u << n);
        uint32_t mask = (n == 0) ? 0u : ((1u << n) - 1u);
        for (uint32_t code = 0; code < (1u << n); ++code) {
            uint32_t rep = std::min({code, reverse_code(code, n), (~code) & mask,
                                     reverse_code((~code) & mask, n)});
            if (rep < code)
                row[code] = row[rep];
            else
                row[code] = exact_h(binary_word(code, n), limits);
        }
    }
    return table;
}

} // namespace

int theorem_violations(const VerifyReport& report) {
    int count = 0;
    for (const auto& c : report.checks)
        if (c.theorem && !c.pass) ++count;
    return count;
}

VerifyReport verify_inequalities(int max_n, const SearchLimits& limits) {
    if (max_n < 1) throw_invalid("InvalidArgument: max_n must be >= 1");
    VerifyReport report;
    report.suite = "inequalities";

    const int max_len = max_n + 2; // extensions up to two symbols
    auto h = binary_h_table(max_len, limits);

    Checker monotone("h nonincreasing in m");
    Checker bounds("1 <= h(m) <= n-m+1");
    Checker triv("h_x(0) equals the unique-path complexity");
    Checker hyde("A_N within floor(n/2)+1");
    Checker extension("h_x(m) <= h_xy(m), |y| <= 2");
    Checker step_up("h_x(n-1)+1 >= h_xb(n-1)");
    Checker additive("h_x(m) + |y| >= h_xy(m)");
    Checker g_chain("g_x(k) <= g_xb(k+1) <= g_x(k)+1");
    Checker minus1("h_x(n-k) >= 2 unless unary or k=0");
    Checker class_order("exact <= multi-run <= single-run <= n-m+1");
    Checker counts_monotone("min string count nonincreasing in k");

    for (int n = 0; n <= max_len; ++n) {
        for (uint32_t code = 0; code < (1u << n); ++code) {
            const auto& sf = h[static_cast<size_t>(n)][code];
            Word w = binary_word(code, n);
            std::string ws = w.to_string();
            for (int m = 0; m < n; ++m)
                monotone.expect(sf.at(m) >= sf.at(m + 1), ws + " at m=" + std::to_string(m));
            for (int m = 0; m <= n; ++m)
                bounds.expect(1 <= sf.at(m) && sf.at(m) <= n - m + 1,
                              ws + " at m=" + std::to_string(m));
        }
    }

    for (int n = 0; n <= max_n; ++n) {
        for (uint32_t code = 0; code < (1u << n); ++code) {
            Word w = binary_word(code, n);
            std::string ws = w.to_string();
            const auto& sf = h[static_cast<size_t>(n)][code];

            int a_n = automatic_complexity(w, limits);
            triv.expect(sf.at(0) == a_n, ws + ": h(0)=" + std::to_string(sf.at(0)) +
                                             " A_N=" + std::to_string(a_n));
            hyde.expect(a_n <= hyde_bound(n), ws);

            if (n >= 1 && !w.is_unary())
                for (int k = 1; k <= n; ++k)
                    minus1.expect(sf.at(n - k) >= 2, ws + " at k=" + std::to_string(k));

            auto counts = min_count_per_k(w, hyde_bound(n), limits);
            for (size_t k = 2; k < counts.size(); ++k)
                counts_monotone.expect(counts[k] <= counts[k - 1],
                                       ws + " at k=" + std::to_string(k));

            for (int ylen = 1; ylen <= 2; ++ylen) {
                for (uint32_t ycode = 0; ycode < (1u << ylen); ++ycode) {
                    uint32_t xy = (code << ylen) | ycode;
                    const auto& sfy = h[static_cast<size_t>(n + ylen)][xy];
                    std::string pair = ws + " y=" + binary_word(ycode, ylen).to_string();
                    for (int m = 0; m <= n; ++m) {
                        extension.expect(sf.at(m) <= sfy.at(m),
                                         pair + " at m=" + std::to_string(m));
                        additive.expect(sf.at(m) + ylen >= sfy.at(m),
                                        pair + " at m=" + std::to_string(m));
                    }
                    if (ylen == 1) {
                        if (n >= 1) step_up.expect(sf.at(n - 1) + 1 >= sfy.at(n - 1), pair);
                        for (int k = 0; k <= n; ++k) {
                            int gx = sf.at(n - k);
                            int gxb = sfy.at(n - k); // g_xb(k+1) = h_xb((n+1)-(k+1))
                            g_chain.expect(gx <= gxb && gxb <= gx + 1,
                                           pair + " at k=" + std::to_string(k));
                        }
                    }
                }
            }

            StructureFunction multi = multi_run_sf(w);
            StructureFunction single = single_run_sf(w);
            for (int m = 0; m <= n; ++m)
                class_order.expect(sf.at(m) <= multi.at(m) && multi.at(m) <= single.at(m) &&
                                       single.at(m) <= n - m + 1,
                                   ws + " at m=" + std::to_string(m));
        }
    }

    // asymptotic-curve trend: reported only, the bound is a limsup statement
    for (int n = 1; n <= max_len; ++n) {
        double worst = -1e9;
        for (uint32_t code = 0; code < (1u << n); ++code) {
            const auto& sf = h[static_cast<size_t>(n)][code];
            for (int m = 0; m <= n; ++m) {
                double slack = double(sf.at(m)) / n - u_bound(double(m) / n, 2);
                worst = std::max(worst, slack);
            }
        }
        report.notes.push_back(format("trend n=%d: max h_x(m)/n - u(m/n) = %+.4f", n, worst));
    }

    for (Checker* c : {&monotone, &bounds, &triv, &hyde, &extension, &step_up, &additive,
                       &g_chain, &minus1, &class_order, &counts_monotone})
        report.checks.push_back(c->result);
    return report;
}

VerifyReport verify_gn(int max_n, int max_k, const SearchLimits& limits) {
    if (max_n < 1 || max_k < 0) throw_invalid("InvalidArgument: bad gn suite bounds");
    VerifyReport report;
    report.suite = "gn";

    // G[n][k] for n = 1..max_n+1, k = 0..min(max_k+1, n)
    std::vector<GTable> tables;
    for (int n = 1; n <= max_n + 1; ++n)
        tables.push_back(g_table(n, std::min(max_k + 1, n), 2, limits));

    auto G = [&](int n, int k) { return tables[static_cast<size_t>(n - 1)].entries[static_cast<size_t>(k)]; };

    Checker base("G_n(0) = 1");
    Checker cap("G_n(k) <= k+1");
    Checker shift("G_n(k) <= G_{n+1}(k+1)");
    Checker monotone_conj("conjecture: G_n(k) <= G_{n+1}(k)", /*theorem=*/false);

    for (int n = 1; n <= max_n + 1; ++n) {
        base.expect(G(n, 0) == 1, format("n=%d", n));
        for (int k = 0; k <= std::min(max_k + 1, n); ++k)
            cap.expect(G(n, k) <= k + 1, format("n=%d k=%d", n, k));
    }
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; k <= std::min(max_k, n); ++k)
            shift.expect(G(n, k) <= G(n + 1, k + 1), format("n=%d k=%d", n, k));
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; k <= std::min({max_k, n, max_n}); ++k) {
            if (k > n + 1) continue;
            std::string witness =
                tables[static_cast<size_t>(n)].maximizers[static_cast<size_t>(k)].to_string();
            monotone_conj.expect(G(n, k) <= G(n + 1, k),
                                 format("n=%d k=%d witness %s", n, k, witness.c_str()));
        }

    for (int k = 0; k <= max_k; ++k) {
        std::string row = format("G_n(%d) for n=%d..%d:", k, std::max(1, k), max_n + 1);
        int peak = 0;
        for (int n = std::max(1, k); n <= max_n + 1; ++n) {
            if (k > n) continue;
            row += format(" %d", G(n, k));
            peak = std::max(peak, G(n, k));
        }
        row += format("  (reaches k+1: %s)", peak == k + 1 ? "yes" : "no");
        report.notes.push_back(row);
    }
    report.notes.push_back("conjecture rows are finite evidence, not proof");

    for (Checker* c : {&base, &cap, &shift, &monotone_conj}) report.checks.push_back(c->result);
    return report;
}

namespace {

// minimum |L(M) ∩ Σ^n| over every k-state NFA accepting w, by enumerating
// every transition relation, start state and accepting set
uint64_t brute_force_min_count(const Word& w, int k) {
    int n = w.size();
    int b = w.alphabet_size;
    int edges = k * b * k;
    if (edges > 20) throw_limit("SearchLimitExceeded: brute-force oracle too wide");

    uint64_t best = UINT64_MAX;
    std::vector<uint32_t> tmask(static_cast<size_t>(k) * b);
    std::vector<uint64_t> cnt(1u << k), cnt_next(1u << k);

    for (uint32_t rel = 0; rel < (1u << edges); ++rel) {
        for (int from = 0; from < k; ++from)
            for (int sym = 0; sym < b; ++sym) {
                uint32_t m = 0;
                for (int to = 0; to < k; ++to)
                    if ((rel >> ((from * b + sym) * k + to)) & 1u) m |= 1u << to;
                tmask[static_cast<size_t>(from * b + sym)] = m;
            }
        for (int start = 0; start < k; ++start) {
            // subset of states reachable while consuming w
            uint32_t reach = 1u << start;
            for (int i = 0; i < n && reach; ++i) {
                uint32_t next = 0;
                uint32_t bits = reach;
                while (bits) {
                    int q = __builtin_ctz(bits);
                    bits &= bits - 1;
                    next |= tmask[static_cast<size_t>(q * b + w[i])];
                }
                reach = next;
            }
            if (!reach) continue;

            // string counts per final subset, one DP for every accept set
            std::fill(cnt.begin(), cnt.end(), 0);
            cnt[1u << start] = 1;
            for (int i = 0; i < n; ++i) {
                std::fill(cnt_next.begin(), cnt_next.end(), 0);
                for (uint32_t s = 1; s < (1u << k); ++s) {
                    if (!cnt[s]) continue;
                    for (int sym = 0; sym < b; ++sym) {
                        uint32_t next = 0;
                        uint32_t bits = s;
                        while (bits) {
                            int q = __builtin_ctz(bits);
                            bits &= bits - 1;
                            next |= tmask[static_cast<size_t>(q * b + sym)];
                        }
                        if (next) cnt_next[next] += cnt[s];
                    }
                }
                std::swap(cnt, cnt_next);
            }
            for (uint32_t accept = 1; accept < (1u << k); ++accept) {
                if (!(reach & accept)) continue; // must accept w
                uint64_t total = 0;
                for (uint32_t s = 1; s < (1u << k); ++s)
                    if (cnt[s] && (s & accept)) total += cnt[s];
                best = std::min(best, total);
            }
        }
    }
    return best;
}

uint64_t brute_force_string_filter(const Nfa& m, int n) {
    uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<uint64_t>(m.alphabet_size());
    uint64_t hits = 0;
    std::vector<Symbol> word(static_cast<size_t>(n));
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            word[static_cast<size_t>(i)] = static_cast<Symbol>(c % m.alphabet_size());
            c /= static_cast<uint64_t>(m.alphabet_size());
        }
        uint64_t reach = 1ull << m.start();
        for (int i = 0; i < n && reach; ++i) {
            uint64_t next = 0;
            uint64_t bits = reach;
            while (bits) {
                int q = __builtin_ctzll(bits);
                bits &= bits - 1;
                next |= m.target_mask(q, word[static_cast<size_t>(i)]);
            }
            reach = next;
        }
        for (int q : m.accepting())
            if ((reach >> q) & 1ull) {
                ++hits;
                break;
            }
    }
    return hits;
}

// every separated selection of maximal runs, each paired with every loop
// valence containing its symbols
void for_each_selection(const Word& w, const std::function<void(const RunSelection&)>& fn) {
    struct Item {
        Run run;
        Valence loop;
    };
    std::vector<Item> pool;
    for (Valence v : every_valence(w.alphabet_size))
        for (const Run& r : maximal_runs(w, v))
            for (Valence loop : every_valence(w.alphabet_size))
                if ((v.mask & ~loop.mask) == 0) pool.push_back({r, loop});
    std::sort(pool.begin(), pool.end(), [](const Item& a, const Item& b) {
        return std::tie(a.run.start, a.run.length, a.run.valence.mask, a.loop.mask) <
               std::tie(b.run.start, b.run.length, b.run.valence.mask, b.loop.mask);
    });

    RunSelection sel;
    auto dfs = [&](auto&& self, size_t idx, int prev_end) -> void {
        fn(sel);
        for (size_t j = idx; j < pool.size(); ++j) {
            if (prev_end >= 0 && pool[j].run.start <= prev_end) continue; // keep a gap
            sel.items.emplace_back(pool[j].run, pool[j].loop);
            self(self, j + 1, pool[j].run.end());
            sel.items.pop_back();
        }
    };
    dfs(dfs, 0, -1);
}

} // namespace

VerifyReport verify_oracles(const SearchLimits& limits) {
    VerifyReport report;
    report.suite = "oracles";

    Checker canonical_vs_brute("canonical search equals unrestricted brute force (k<=3, n<=6)");
    for (int n = 1; n <= 6; ++n) {
        for (uint32_t code = 0; code < (1u << n); ++code) {
            Word w = binary_word(code, n);
            auto counts = min_count_per_k(w, hyde_bound(n), limits);
            for (int k = 1; k <= 3; ++k) {
                BigInt canonical =
                    k < static_cast<int>(counts.size()) ? counts[static_cast<size_t>(k)] : counts.back();
                uint64_t brute = brute_force_min_count(w, k);
                canonical_vs_brute.expect(canonical == brute,
                                          w.to_string() + " at k=" + std::to_string(k));
            }
        }
    }
    report.checks.push_back(canonical_vs_brute.result);

    Checker subset_vs_filter("subset counting equals string filtering");
    {
        // all 2-state binary automata, then seeded samples with 3-4 states
        for (uint32_t rel = 0; rel < (1u << 8); ++rel) {
            std::vector<Nfa::Transition> ts;
            for (int from = 0; from < 2; ++from)
                for (int sym = 0; sym < 2; ++sym)
                    for (int to = 0; to < 2; ++to)
                        if ((rel >> ((from * 2 + sym) * 2 + to)) & 1u)
                            ts.emplace_back(from, sym, to);
            for (int start = 0; start < 2; ++start)
                for (uint32_t accept = 1; accept < 4; ++accept) {
                    std::set<int> acc;
                    for (int q = 0; q < 2; ++q)
                        if ((accept >> q) & 1u) acc.insert(q);
                    Nfa m(2, 2, start, acc, ts);
                    for (int n : {0, 3, 6}) {
                        subset_vs_filter.expect(
                            count_accepted_strings(m, n) == brute_force_string_filter(m, n),
                            format("rel=%u start=%d accept=%u n=%d", rel, start, accept, n));
                    }
                }
        }
        std::mt19937 rng(20140602u);
        for (int k : {3, 4}) {
            for (int trial = 0; trial < 400; ++trial) {
                std::vector<Nfa::Transition> ts;
                for (int from = 0; from < k; ++from)
                    for (int sym = 0; sym < 2; ++sym)
                        for (int to = 0; to < k; ++to)
                            if (rng() % 4 == 0) ts.emplace_back(from, sym, to);
                std::set<int> acc{static_cast<int>(rng() % static_cast<uint32_t>(k))};
                Nfa m(k, 2, 0, acc, ts);
                int n = 1 + static_cast<int>(rng() % 8u);
                subset_vs_filter.expect(
                    count_accepted_strings(m, n) == brute_force_string_filter(m, n),
                    format("random k=%d trial=%d", k, trial));
            }
        }
    }
    report.checks.push_back(subset_vs_filter.result);

    Checker selection_vs_nfa("selection counting equals automaton counting (n<=8)");
    for (int n = 1; n <= 8; ++n) {
        for (uint32_t code = 0; code < (1u << n); ++code) {
            Word w = binary_word(code, n);
            for_each_selection(w, [&](const RunSelection& sel) {
                BigInt direct = selection_count(sel, n, 2);
                BigInt via_nfa = count_accepted_strings(build_chain_with_loops(w, sel.items), n);
                selection_vs_nfa.expect(direct == via_nfa,
                                        w.to_string() + " with " +
                                            std::to_string(sel.items.size()) + " loops");
            });
        }
    }
    report.checks.push_back(selection_vs_nfa.result);

    Checker cdf_vs_enum("run-length CDF equals exhaustive enumeration (n<=12)");
    for (int b : {2, 3}) {
        for (int n = 1; n <= 12; ++n) {
            uint64_t total = 1;
            for (int i = 0; i < n; ++i) total *= static_cast<uint64_t>(b);
            // histogram of longest-run lengths for the valence {0..s-1}
            std::vector<std::vector<uint64_t>> hist(static_cast<size_t>(b) + 1,
                                                    std::vector<uint64_t>(static_cast<size_t>(n) + 1, 0));
            std::vector<Symbol> word(static_cast<size_t>(n));
            for (uint64_t code = 0; code < total; ++code) {
                uint64_t c = code;
                for (int i = 0; i < n; ++i) {
                    word[static_cast<size_t>(i)] = static_cast<Symbol>(c % static_cast<uint64_t>(b));
                    c /= static_cast<uint64_t>(b);
                }
                for (int s = 1; s <= b; ++s) {
                    int longest = 0, run = 0;
                    for (int i = 0; i < n; ++i) {
                        run = (word[static_cast<size_t>(i)] < s) ? run + 1 : 0;
                        longest = std::max(longest, run);
                    }
                    ++hist[static_cast<size_t>(s)][static_cast<size_t>(longest)];
                }
            }
            for (int s = 1; s <= b; ++s) {
                uint64_t cumulative = 0;
                for (int x = 0; x <= n; ++x) {
                    cumulative += hist[static_cast<size_t>(s)][static_cast<size_t>(x)];
                    Rational enumerated(cumulative, total);
                    Rational recursed = longest_run_cdf(n, x, Rational(s, b));
                    cdf_vs_enum.expect(enumerated == recursed,
                                       format("b=%d n=%d s=%d x=%d", b, n, s, x));
                }
            }
        }
    }
    report.checks.push_back(cdf_vs_enum.result);

    Checker greedy_vs_search("binary greedy decision equals valence search (n<=12)");
    for (int n = 1; n <= 12; ++n) {
        for (uint32_t code = 0; code < (1u << n); ++code) {
            Word w = binary_word(code, n);
            for (int m = 0; m <= n; ++m)
                for (int q = 1; q <= n + 1; ++q)
                    greedy_vs_search.expect(
                        multi_run_decide(w, m, q).ok == multi_run_decide_search(w, m, q).ok,
                        w.to_string() + format(" m=%d q=%d", m, q));
        }
    }
    report.checks.push_back(greedy_vs_search.result);

    Checker spine("spine automata accept exactly one string (odd n<=11)");
    for (int n = 1; n <= 11; n += 2) {
        for (uint32_t code = 0; code < (1u << n); ++code) {
            Word w = binary_word(code, n);
            Nfa m = build_kayleigh(w);
            spine.expect(m.state_count() == hyde_bound(n) &&
                             count_accepting_paths(m, w) == 1 &&
                             count_accepted_strings(m, n) == 1,
                         w.to_string());
        }
    }
    report.checks.push_back(spine.result);

    Checker single_vs_enum("single-run class equals one-loop enumeration (n<=9)");
    for (int n = 1; n <= 9; ++n) {
        for (uint32_t code = 0; code < (1u << n); ++code) {
            Word w = binary_word(code, n);
            // every one-loop chain: a trimmed run over any valence
            std::vector<std::pair<int, BigInt>> machines; // (states, count)
            machines.emplace_back(n + 1, 1);              // bare chain
            for (Valence v : every_valence(2))
                for (const Run& r : maximal_runs(w, v))
                    for (int len = 1; len <= r.length; ++len) {
                        RunSelection sel;
                        sel.items.emplace_back(Run{r.start, len, v}, v);
                        Nfa m = build_chain_with_loops(w, sel.items);
                        machines.emplace_back(m.state_count(), count_accepted_strings(m, n));
                    }
            StructureFunction sf = single_run_sf(w);
            for (int m = 0; m <= n; ++m) {
                BigInt allowance = big_pow(2, static_cast<unsigned long>(m));
                int best = n + 1;
                for (auto& [states, count] : machines)
                    if (count <= allowance) best = std::min(best, states);
                single_vs_enum.expect(best == sf.at(m),
                                      w.to_string() + format(" m=%d", m));
            }
        }
    }
    report.checks.push_back(single_vs_enum.result);

    return report;
}

} // namespace acsf
