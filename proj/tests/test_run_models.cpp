#include <doctest.h>

#include <random>

#include "exact_search.hpp"
#include "nfa.hpp"
#include "run_models.hpp"

using namespace acsf;

TEST_CASE("selection count closed forms") {
    // one unary loop: a single composition, each contributing 1
    RunSelection one;
    one.items.emplace_back(Run{0, 3, Valence::of({0})}, Valence::of({0}));
    CHECK(selection_count(one, 6, 2) == 1);

    // two unary loops with budget 3: C(4,1) compositions
    RunSelection two;
    two.items.emplace_back(Run{0, 2, Valence::of({0})}, Valence::of({0}));
    two.items.emplace_back(Run{2, 1, Valence::of({1})}, Valence::of({1}));
    CHECK(selection_count(two, 4, 2) == 4);

    // uniform valence size v: v^X * C(X + l - 1, l - 1)
    RunSelection mixed;
    mixed.items.emplace_back(Run{0, 2, Valence::of({0, 1})}, Valence::of({0, 1}));
    mixed.items.emplace_back(Run{3, 2, Valence::of({0, 2})}, Valence::of({0, 2}));
    int budget = 4;
    CHECK(selection_count(mixed, 8, 3) ==
          big_pow(2, static_cast<unsigned long>(budget)) * binomial(budget + 1, 1));
}

TEST_CASE("selection count validation") {
    RunSelection bad;
    bad.items.emplace_back(Run{0, 5, Valence::of({0})}, Valence::of({0}));
    CHECK_THROWS_AS(selection_count(bad, 4, 2), Error);

    RunSelection overlap;
    overlap.items.emplace_back(Run{0, 3, Valence::of({0})}, Valence::of({0}));
    overlap.items.emplace_back(Run{2, 2, Valence::of({1})}, Valence::of({1}));
    CHECK_THROWS_AS(selection_count(overlap, 6, 2), Error);
}

TEST_CASE("selection count equals automaton count on random selections") {
    std::mt19937 rng(5u);
    for (int trial = 0; trial < 200; ++trial) {
        int b = 2 + static_cast<int>(rng() % 2u);
        int n = 2 + static_cast<int>(rng() % 7u);
        std::vector<Symbol> syms;
        for (int i = 0; i < n; ++i) syms.push_back(static_cast<Symbol>(rng() % static_cast<uint32_t>(b)));
        Word w(syms, b);

        // greedily pick disjoint runs over random valences
        RunSelection sel;
        int cursor = 0;
        while (cursor < n) {
            auto vs = every_valence(b);
            Valence v = vs[rng() % vs.size()];
            bool placed = false;
            for (const Run& r : maximal_runs(w, v)) {
                if (r.start >= cursor && rng() % 2 == 0) {
                    sel.items.emplace_back(r, v);
                    cursor = r.end();
                    placed = true;
                    break;
                }
            }
            if (!placed) break;
        }
        BigInt direct = selection_count(sel, n, b);
        BigInt via_nfa = count_accepted_strings(build_chain_with_loops(w, sel.items), n);
        CHECK(direct == via_nfa);
    }
}

TEST_CASE("multi-run decisions for 0011") {
    Word w = parse_word("0011", 2);
    auto yes = multi_run_decide(w, 2, 2);
    CHECK(yes.ok);
    REQUIRE(yes.witness.items.size() == 2);
    CHECK(yes.witness.items[0].second.size() == 1);

    CHECK_FALSE(multi_run_decide(w, 1, 2).ok);
    CHECK(multi_run_decide(w, 4, 1).ok); // cop-out: one full-alphabet loop gives h(n) = 1
}

TEST_CASE("multi-run structure function of 0011") {
    CHECK(multi_run_sf(parse_word("0011", 2)).values == std::vector<int>{3, 3, 2, 2, 1});
}

TEST_CASE("blocks 0^a 1^(n-a) reach two states at log-many allowed strings") {
    for (int n : {4, 8, 16}) {
        int a = n / 2;
        std::vector<Symbol> syms;
        for (int i = 0; i < n; ++i) syms.push_back(i < a ? 0 : 1);
        Word w(syms, 2);
        int m = 0;
        while ((1 << m) < n) ++m; // ceil(log2 n)
        CHECK(multi_run_sf(w).at(m) == 2);
    }
}

TEST_CASE("decision witnesses are trimmed to the exact budget") {
    std::mt19937 rng(17u);
    for (int trial = 0; trial < 100; ++trial) {
        int b = 2 + static_cast<int>(rng() % 2u);
        int n = 2 + static_cast<int>(rng() % 8u);
        std::vector<Symbol> syms;
        for (int i = 0; i < n; ++i) syms.push_back(static_cast<Symbol>(rng() % static_cast<uint32_t>(b)));
        Word w(syms, b);
        int m = static_cast<int>(rng() % static_cast<uint32_t>(n + 1));
        int q = 1 + static_cast<int>(rng() % static_cast<uint32_t>(n + 1));
        auto decision = multi_run_decide(w, m, q);
        if (!decision.ok) continue;
        int budget = n + 1 - q;
        if (budget <= 0) {
            CHECK(decision.witness.items.empty());
            continue;
        }
        CHECK(decision.witness.total_loop_length() == budget);
        CHECK(selection_count(decision.witness, n, b) <= big_pow(b, static_cast<unsigned long>(m)));
        Nfa chain = build_chain_with_loops(w, decision.witness.items);
        CHECK(chain.state_count() == q);
        CHECK(count_accepting_paths(chain, w) >= 1); // the word is still accepted
    }
}

TEST_CASE("single-run structure function of the ternary example") {
    Word w = parse_word("1010020210", 3);
    StructureFunction sf = single_run_sf(w);
    CHECK(sf.values == std::vector<int>{9, 9, 8, 7, 6, 6, 5, 4, 3, 2, 1});
    CHECK(sf.at(4) == 6); // the binary run of five: 2^5 <= 3^4
    CHECK(sf.at(3) == 7);

    auto witnesses = single_run_witnesses(w);
    REQUIRE(witnesses[4].run.has_value());
    CHECK(witnesses[4].run->length == 5);
    CHECK(witnesses[4].run->valence.size() == 2);
}

TEST_CASE("single-run handles unary and tiny words") {
    CHECK(single_run_sf(parse_word("000", 2)).at(0) == 1);
    CHECK(single_run_sf(parse_word("", 2)).values == std::vector<int>{1});
    CHECK(single_run_sf(parse_word("0", 2)).values == std::vector<int>{2, 1});
}

TEST_CASE("class ordering on every short binary word") {
    for (int n = 0; n <= 6; ++n) {
        for (uint32_t code = 0; code < (1u << n); ++code) {
            std::vector<Symbol> syms;
            for (int i = 0; i < n; ++i) syms.push_back((code >> (n - 1 - i)) & 1u);
            Word w(syms, 2);
            auto exact = exact_h(w);
            auto multi = multi_run_sf(w);
            auto single = single_run_sf(w);
            for (int m = 0; m <= n; ++m) {
                CHECK(exact.at(m) <= multi.at(m));
                CHECK(multi.at(m) <= single.at(m));
                CHECK(single.at(m) <= n - m + 1);
            }
        }
    }
}

TEST_CASE("zero-heavy words admit the counting-chain bound") {
    std::mt19937 rng(29u);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 6 + static_cast<int>(rng() % 7u);
        std::vector<Symbol> syms;
        int zeros = 0;
        for (int i = 0; i < n; ++i) {
            Symbol s = static_cast<Symbol>(rng() % 2u);
            zeros += (s == 0);
            syms.push_back(s);
        }
        Word w(syms, 2);
        StructureFunction sf = multi_run_sf(w);
        for (int m = 0; m <= n; ++m)
            if (big_pow(2, static_cast<unsigned long>(m)) >= binomial(n, zeros))
                CHECK(sf.at(m) <= zeros + 1);
    }
}
