#include <doctest.h>

#include <random>

#include "nfa.hpp"

using namespace acsf;

namespace {

// brute-force oracle: count state sequences consistent with w
long enumerate_paths(const Nfa& m, const Word& w) {
    long count = 0;
    int n = w.size();
    std::vector<int> seq(static_cast<size_t>(n) + 1, 0);
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (m.accepting().count(seq[static_cast<size_t>(n)])) ++count;
            return;
        }
        for (auto& [from, sym, to] : m.transitions())
            if (from == seq[static_cast<size_t>(depth)] && sym == w[depth]) {
                seq[static_cast<size_t>(depth) + 1] = to;
                self(self, depth + 1);
            }
    };
    seq[0] = m.start();
    dfs(dfs, 0);
    return count;
}

} // namespace

TEST_CASE("path counting against sequence enumeration") {
    // the two-state automaton with transitions 0->0, 0->1, 1->1 on symbol 0
    Nfa m(2, 2, 0, {1}, {{0, 0, 0}, {0, 0, 1}, {1, 0, 1}});
    Word w = parse_word("000", 2);
    CHECK(enumerate_paths(m, w) == 3);
    CHECK(count_accepting_paths(m, w) == 3);
    CHECK(count_accepting_paths_any(m, 3) == 3);
}

TEST_CASE("single looping state accepts everything with one path each") {
    Nfa m(1, 2, 0, {0}, {{0, 0, 0}, {0, 1, 0}});
    CHECK(count_accepting_paths(m, parse_word("0110", 2)) == 1);
    CHECK(count_accepted_strings(m, 0) == 1);
    CHECK(count_accepted_strings(m, 5) == 32);
    CHECK(count_accepted_strings(m, 64) == big_pow(2, 64)); // exceeds uint64 range
}

TEST_CASE("alphabet mismatch is rejected") {
    Nfa m(1, 2, 0, {0}, {{0, 0, 0}});
    CHECK_THROWS_AS(count_accepting_paths(m, parse_word("012", 3)), Error);
}

TEST_CASE("spine automaton for 010") {
    Nfa m = build_kayleigh(parse_word("010", 2));
    CHECK(m.state_count() == 2);
    CHECK(count_accepted_strings(m, 3) == 1);
    CHECK(count_accepting_paths(m, parse_word("010", 2)) == 1);
}

TEST_CASE("spine automaton degenerate single symbol") {
    Nfa m = build_kayleigh(parse_word("0", 2));
    CHECK(m.state_count() == 1);
    CHECK(count_accepted_strings(m, 1) == 1);
}

TEST_CASE("spine automaton state count for every odd length") {
    std::mt19937 rng(11u);
    for (int n = 1; n <= 13; n += 2) {
        std::vector<Symbol> syms;
        for (int i = 0; i < n; ++i) syms.push_back(static_cast<Symbol>(rng() % 2u));
        Nfa m = build_kayleigh(Word(syms, 2));
        CHECK(m.state_count() == n / 2 + 1);
    }
    CHECK_THROWS_AS(build_kayleigh(parse_word("0101", 2)), Error);
}

TEST_CASE("chain with loops collapses runs") {
    Word w = parse_word("0011", 2);
    std::vector<std::pair<Run, Valence>> sel{{Run{0, 2, Valence::of({0})}, Valence::of({0})}};
    Nfa m = build_chain_with_loops(w, sel);
    CHECK(m.state_count() == 3);
    CHECK(count_accepted_strings(m, 4) == 1);
    CHECK(count_accepting_paths(m, w) == 1);
}

TEST_CASE("bare chain accepts exactly its word") {
    Word w = parse_word("0110", 2);
    Nfa m = build_chain_with_loops(w, {});
    CHECK(m.state_count() == 5);
    CHECK(count_accepted_strings(m, 4) == 1);
}

TEST_CASE("chain rejects overlapping or misordered selections") {
    Word w = parse_word("0011", 2);
    std::vector<std::pair<Run, Valence>> overlapping{
        {Run{0, 3, Valence::of({0, 1})}, Valence::of({0, 1})},
        {Run{2, 2, Valence::of({1})}, Valence::of({1})}};
    CHECK_THROWS_AS(build_chain_with_loops(w, overlapping), Error);

    std::vector<std::pair<Run, Valence>> outside{{Run{0, 2, Valence::of({1})}, Valence::of({1})}};
    CHECK_THROWS_AS(build_chain_with_loops(w, outside), Error); // 00 not inside valence {1}
}

TEST_CASE("counting chain accepts binomially many strings") {
    // forward edges on 0, loops on 1 at every state
    Nfa m = build_counting_chain(3, 0, Valence::of({1}), 2);
    CHECK(m.state_count() == 4);
    CHECK(count_accepted_strings(m, 5) == 10); // C(5,3)
    CHECK(count_accepted_strings(m, 3) == 1);
    CHECK(count_accepted_strings(m, 2) == 0);
}

TEST_CASE("unary loop chain count matches the stars-and-bars formula") {
    // chain of q states, loops on symbol 1 at chosen states, b=2
    Word w = parse_word("0110110", 2);
    std::vector<std::pair<Run, Valence>> sel{
        {Run{1, 2, Valence::of({1})}, Valence::of({1})},
        {Run{4, 2, Valence::of({1})}, Valence::of({1})}};
    Nfa m = build_chain_with_loops(w, sel);
    int n = 7, q = m.state_count(), loops = 2;
    CHECK(q == 4);
    CHECK(count_accepted_strings(m, n) == binomial(n + 1 - q + loops - 1, loops - 1));
}

TEST_CASE("strings never exceed paths or the alphabet power") {
    std::mt19937 rng(23u);
    for (int trial = 0; trial < 60; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4u);
        int b = 2 + static_cast<int>(rng() % 2u);
        std::vector<Nfa::Transition> ts;
        for (int from = 0; from < k; ++from)
            for (Symbol a = 0; a < b; ++a)
                for (int to = 0; to < k; ++to)
                    if (rng() % 3 == 0) ts.emplace_back(from, a, to);
        std::set<int> accepting{static_cast<int>(rng() % static_cast<uint32_t>(k))};
        Nfa m(k, b, 0, accepting, ts);
        int n = static_cast<int>(rng() % 7u);
        BigInt strings = count_accepted_strings(m, n);
        CHECK(strings <= count_accepting_paths_any(m, n));
        CHECK(strings <= big_pow(b, static_cast<unsigned long>(n)));
    }
}

TEST_CASE("nfa json shape") {
    Nfa m = build_kayleigh(parse_word("010", 2));
    std::string j = nfa_to_json(m);
    CHECK(j.find("\"states\":2") != std::string::npos);
    CHECK(j.find("\"transitions\"") != std::string::npos);
}
