#include "nfa.hpp"

#include <algorithm>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace acsf {

Nfa::Nfa(int state_count, int alphabet_size, int start, std::set<int> accepting,
         std::vector<Transition> transitions)
    : state_count_(state_count),
      alphabet_size_(alphabet_size),
      start_(start),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
    if (state_count_ < 1) throw_invalid("InvalidAutomaton: at least one state required");
    if (alphabet_size_ < 1) throw_invalid("InvalidAlphabet: alphabet size must be >= 1");
    if (start_ < 0 || start_ >= state_count_)
        throw_invalid("InvalidAutomaton: start state out of range");
    for (int q : accepting_)
        if (q < 0 || q >= state_count_)
            throw_invalid("InvalidAutomaton: accepting state out of range");
    for (auto& [from, sym, to] : transitions_) {
        if (from < 0 || from >= state_count_ || to < 0 || to >= state_count_)
            throw_invalid("InvalidAutomaton: transition state out of range");
        if (sym < 0 || sym >= alphabet_size_)
            throw_invalid("InvalidSymbol: transition symbol outside alphabet");
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());

    if (state_count_ <= 64) {
        target_masks_.assign(static_cast<size_t>(state_count_) * alphabet_size_, 0);
        for (auto& [from, sym, to] : transitions_)
            target_masks_[static_cast<size_t>(from) * alphabet_size_ + sym] |= 1ull << to;
    }
}

uint64_t Nfa::target_mask(int state, Symbol symbol) const {
    return target_masks_[static_cast<size_t>(state) * alphabet_size_ + symbol];
}

BigInt count_accepting_paths(const Nfa& m, const Word& w) {
    if (m.alphabet_size() != w.alphabet_size)
        throw_invalid("AlphabetMismatch: automaton and word alphabets differ");

    std::vector<BigInt> cur(static_cast<size_t>(m.state_count()), 0);
    cur[static_cast<size_t>(m.start())] = 1;
    std::vector<BigInt> next(cur.size());
    for (int i = 0; i < w.size(); ++i) {
        std::fill(next.begin(), next.end(), 0);
        for (auto& [from, sym, to] : m.transitions()) {
            if (sym != w[i]) continue;
            if (cur[static_cast<size_t>(from)] != 0)
                next[static_cast<size_t>(to)] += cur[static_cast<size_t>(from)];
        }
        std::swap(cur, next);
    }
    BigInt total = 0;
    for (int q : m.accepting()) total += cur[static_cast<size_t>(q)];
    return total;
}

BigInt count_accepting_paths_any(const Nfa& m, int n) {
    if (n < 0) throw_invalid("InvalidArgument: negative length");
    // adjacency with multiplicity = number of symbols on the edge
    std::vector<std::vector<int>> mult(static_cast<size_t>(m.state_count()),
                                       std::vector<int>(static_cast<size_t>(m.state_count()), 0));
    for (auto& [from, sym, to] : m.transitions())
        ++mult[static_cast<size_t>(from)][static_cast<size_t>(to)];

    std::vector<BigInt> cur(static_cast<size_t>(m.state_count()), 0);
    cur[static_cast<size_t>(m.start())] = 1;
    std::vector<BigInt> next(cur.size());
    for (int step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (int from = 0; from < m.state_count(); ++from) {
            if (cur[static_cast<size_t>(from)] == 0) continue;
            for (int to = 0; to < m.state_count(); ++to)
                if (int c = mult[static_cast<size_t>(from)][static_cast<size_t>(to)]; c != 0)
                    next[static_cast<size_t>(to)] += cur[static_cast<size_t>(from)] * c;
        }
        std::swap(cur, next);
    }
    BigInt total = 0;
    for (int q : m.accepting()) total += cur[static_cast<size_t>(q)];
    return total;
}

BigInt count_accepted_strings(const Nfa& m, int n) {
    if (n < 0) throw_invalid("InvalidArgument: negative length");
    if (m.state_count() > 64)
        throw_limit("SearchLimitExceeded: subset counting supports at most 64 states");

    uint64_t accept_mask = 0;
    for (int q : m.accepting()) accept_mask |= 1ull << q;

    // reachable-subset determinization
    std::unordered_map<uint64_t, int> index;
    std::vector<uint64_t> subsets;
    std::vector<int> trans; // [subset * b + symbol] -> subset index or -1
    auto intern = [&](uint64_t mask) {
        auto [it, inserted] = index.emplace(mask, static_cast<int>(subsets.size()));
        if (inserted) {
            subsets.push_back(mask);
            trans.resize(subsets.size() * static_cast<size_t>(m.alphabet_size()), -1);
        }
        return it->second;
    };
    intern(1ull << m.start());
    for (size_t i = 0; i < subsets.size(); ++i) {
        for (Symbol a = 0; a < m.alphabet_size(); ++a) {
            uint64_t next_mask = 0;
            uint64_t bits = subsets[i];
            while (bits) {
                int q = __builtin_ctzll(bits);
                bits &= bits - 1;
                next_mask |= m.target_mask(q, a);
            }
            if (next_mask != 0)
                trans[i * static_cast<size_t>(m.alphabet_size()) + static_cast<size_t>(a)] =
                    intern(next_mask);
        }
    }

    std::vector<BigInt> cur(subsets.size(), 0);
    cur[0] = 1;
    std::vector<BigInt> next(subsets.size());
    for (int step = 0; step < n; ++step) {
        if (next.size() < subsets.size()) next.resize(subsets.size());
        std::fill(next.begin(), next.end(), 0);
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == 0) continue;
            for (Symbol a = 0; a < m.alphabet_size(); ++a) {
                int j = trans[i * static_cast<size_t>(m.alphabet_size()) + static_cast<size_t>(a)];
                if (j >= 0) next[static_cast<size_t>(j)] += cur[i];
            }
        }
        cur.resize(next.size());
        std::swap(cur, next);
    }

    BigInt total = 0;
    for (size_t i = 0; i < cur.size(); ++i)
        if ((subsets[i] & accept_mask) != 0) total += cur[i];
    return total;
}

Nfa build_kayleigh(const Word& x) {
    int n = x.size();
    if (n % 2 == 0)
        throw_invalid("EvenLengthUnsupported: the spine construction needs odd length");
    int half = n / 2; // n = 2*half + 1, states 0..half
    std::vector<Nfa::Transition> ts;
    for (int i = 0; i < half; ++i) ts.emplace_back(i, x[i], i + 1);
    ts.emplace_back(half, x[half], half); // middle self-loop
    for (int i = half + 1; i < n; ++i) ts.emplace_back(n - i, x[i], n - i - 1);
    return Nfa(half + 1, x.alphabet_size, 0, {0}, std::move(ts));
}

Nfa build_chain_with_loops(const Word& w,
                           std::span<const std::pair<Run, Valence>> selection) {
    int n = w.size();
    int total_loops = 0;
    int prev_end = -1;
    for (auto& [run, valence] : selection) {
        if (run.length < 1 || run.start < 0 || run.end() > n)
            throw_invalid("InvalidSelection: run outside the word");
        if (prev_end >= 0 && run.start < prev_end)
            throw_invalid("OverlappingRuns: selected runs must be disjoint and ordered");
        if (prev_end >= 0 && run.start == prev_end)
            throw_invalid(
                "InvalidSelection: touching runs would merge loop states; leave a forward "
                "symbol between them");
        for (int i = run.start; i < run.end(); ++i)
            if (!valence.contains(w[i]))
                throw_invalid("InvalidSelection: run symbol outside its loop valence");
        if ((valence.mask & ~Valence::full(w.alphabet_size).mask) != 0)
            throw_invalid("InvalidSelection: loop valence outside the alphabet");
        prev_end = run.end();
        total_loops += run.length;
    }

    std::vector<Nfa::Transition> ts;
    int state = 0;
    size_t next_run = 0;
    for (int i = 0; i < n; ++i) {
        if (next_run < selection.size() && selection[next_run].first.start == i) {
            const auto& [run, valence] = selection[next_run];
            for (Symbol a : valence.members()) ts.emplace_back(state, a, state);
            i = run.end() - 1; // loop state consumes the whole run in place
            ++next_run;
        } else {
            ts.emplace_back(state, w[i], state + 1);
            ++state;
        }
    }
    int k = n + 1 - total_loops;
    return Nfa(k, w.alphabet_size, 0, {k - 1}, std::move(ts));
}

Nfa build_counting_chain(int forward_count, Symbol forward_symbol, Valence loop_valence,
                         int alphabet_size) {
    if (forward_count < 0) throw_invalid("InvalidArgument: negative forward count");
    if (forward_symbol < 0 || forward_symbol >= alphabet_size)
        throw_invalid("InvalidSymbol: forward symbol outside alphabet");
    if (loop_valence.contains(forward_symbol))
        throw_invalid("InvalidSelection: loop valence must not contain the forward symbol");
    std::vector<Nfa::Transition> ts;
    for (int i = 0; i <= forward_count; ++i) {
        if (i < forward_count) ts.emplace_back(i, forward_symbol, i + 1);
        for (Symbol a : loop_valence.members()) {
            if (a >= alphabet_size)
                throw_invalid("InvalidSelection: loop valence outside the alphabet");
            ts.emplace_back(i, a, i);
        }
    }
    return Nfa(forward_count + 1, alphabet_size, 0, {forward_count}, std::move(ts));
}

std::string nfa_to_json(const Nfa& m) {
    nlohmann::ordered_json j;
    j["states"] = m.state_count();
    j["alphabet"] = m.alphabet_size();
    j["start"] = m.start();
    j["accepting"] = m.accepting();
    auto& ts = j["transitions"] = nlohmann::ordered_json::array();
    for (auto& [from, sym, to] : m.transitions()) ts.push_back({from, sym, to});
    return j.dump();
}

} // namespace acsf
