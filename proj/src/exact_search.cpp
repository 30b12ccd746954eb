#include "exact_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace acsf {

namespace {

// Transition set packed as bits (from*b + symbol)*kmax + to, plus the
// accepting state. Identifies a path-induced NFA up to the canonical
// state naming, so string counts can be memoized per automaton.
struct LeafKey {
    std::array<uint64_t, 4> bits{};
    int final_state = 0;
    bool operator==(const LeafKey&) const = default;
};

struct LeafKeyHash {
    size_t operator()(const LeafKey& k) const {
        uint64_t h = 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(k.final_state);
        for (uint64_t w : k.bits) h = (h ^ w) * 0xff51afd7ed558ccdull;
        return static_cast<size_t>(h ^ (h >> 33));
    }
};

struct LeafValue {
    uint64_t strings = 0;
    uint8_t word_paths_capped = 0; // 0 = not computed, else min(paths, 2)
};

constexpr uint64_t kUnset = std::numeric_limits<uint64_t>::max();

class CanonicalSearch {
public:
    CanonicalSearch(const Word& w, int kmax)
        : w_(w), n_(w.size()), b_(w.alphabet_size), kmax_(kmax) {
        if (kmax_ < 1) throw_invalid("InvalidArgument: k_max must be >= 1");
        if (kmax_ * kmax_ * b_ > 256)
            throw_limit("SearchLimitExceeded: transition space exceeds the packed key");
        if (n_ > 0 && n_ * std::log2(double(b_)) > 62.0)
            throw_limit("SearchLimitExceeded: string counts exceed 64-bit range");
        tmask_.assign(static_cast<size_t>(kmax_) * b_, 0);
        stamp_.assign(1u << kmax_, 0);
        idx_.assign(1u << kmax_, 0);
        min_count_.assign(static_cast<size_t>(kmax_) + 1, kUnset);
        unique_.assign(static_cast<size_t>(kmax_) + 1, 0);
        memo_.reserve(1u << 14);
    }

    void run() {
        dfs(0, 0, 1);
        // a k-state witness is also a (k+1)-state witness with an idle state
        for (int k = 2; k <= kmax_; ++k) {
            min_count_[static_cast<size_t>(k)] =
                std::min(min_count_[static_cast<size_t>(k)], min_count_[static_cast<size_t>(k) - 1]);
            unique_[static_cast<size_t>(k)] =
                unique_[static_cast<size_t>(k)] | unique_[static_cast<size_t>(k) - 1];
        }
    }

    const std::vector<uint64_t>& min_count() const { return min_count_; }
    const std::vector<uint8_t>& unique_ok() const { return unique_; }

    // first canonical automaton (DFS order) within the state budget whose
    // string count is <= max_count (and, if asked, has a unique path)
    std::optional<Nfa> find_witness(uint64_t max_count, bool need_unique) {
        witness_max_ = max_count;
        witness_unique_ = need_unique;
        witness_.reset();
        dfs_witness(0, 0, 1);
        return witness_;
    }

private:
    void dfs(int i, int cur, int used) {
        if (i == n_) {
            visit_leaf(cur, used);
            return;
        }
        int limit = std::min(used, kmax_ - 1);
        size_t mi = static_cast<size_t>(cur) * b_ + w_[i];
        for (int nxt = 0; nxt <= limit; ++nxt) {
            uint32_t bit = 1u << nxt;
            bool added = (tmask_[mi] & bit) == 0;
            int bitidx = 0;
            if (added) {
                tmask_[mi] |= bit;
                bitidx = static_cast<int>(mi) * kmax_ + nxt;
                key_.bits[static_cast<size_t>(bitidx >> 6)] ^= 1ull << (bitidx & 63);
            }
            dfs(i + 1, nxt, std::max(used, nxt + 1));
            if (added) {
                tmask_[mi] &= ~bit;
                key_.bits[static_cast<size_t>(bitidx >> 6)] ^= 1ull << (bitidx & 63);
            }
        }
    }

    bool dfs_witness(int i, int cur, int used) {
        if (i == n_) {
            LeafValue& v = leaf_value(cur);
            if (v.strings > witness_max_) return false;
            if (witness_unique_) {
                if (v.strings != 1) return false;
                if (v.word_paths_capped == 0) v.word_paths_capped = count_word_paths_capped(cur);
                if (v.word_paths_capped != 1) return false;
            }
            witness_ = materialize(cur, used);
            return true;
        }
        int limit = std::min(used, kmax_ - 1);
        size_t mi = static_cast<size_t>(cur) * b_ + w_[i];
        for (int nxt = 0; nxt <= limit; ++nxt) {
            uint32_t bit = 1u << nxt;
            bool added = (tmask_[mi] & bit) == 0;
            int bitidx = 0;
            if (added) {
                tmask_[mi] |= bit;
                bitidx = static_cast<int>(mi) * kmax_ + nxt;
                key_.bits[static_cast<size_t>(bitidx >> 6)] ^= 1ull << (bitidx & 63);
            }
            bool done = dfs_witness(i + 1, nxt, std::max(used, nxt + 1));
            if (added) {
                tmask_[mi] &= ~bit;
                key_.bits[static_cast<size_t>(bitidx >> 6)] ^= 1ull << (bitidx & 63);
            }
            if (done) return true;
        }
        return false;
    }

    LeafValue& leaf_value(int final_state) {
        LeafKey key = key_;
        key.final_state = final_state;
        auto it = memo_.find(key);
        if (it == memo_.end())
            it = memo_.emplace(key, LeafValue{count_strings(final_state), 0}).first;
        return it->second;
    }

    void visit_leaf(int final_state, int used) {
        LeafValue& v = leaf_value(final_state);
        auto u = static_cast<size_t>(used);
        if (v.strings < min_count_[u]) min_count_[u] = v.strings;
        if (v.strings == 1 && !unique_[u]) {
            if (v.word_paths_capped == 0) v.word_paths_capped = count_word_paths_capped(final_state);
            if (v.word_paths_capped == 1) unique_[u] = 1;
        }
    }

    // |L(M) ∩ Σ^n| for the current induced automaton, via reachable-subset
    // determinization over at most 2^kmax masks
    uint64_t count_strings(int final_state) {
        ++version_;
        reach_.clear();
        det_.clear();
        auto intern = [&](uint32_t mask) {
            if (stamp_[mask] != version_) {
                stamp_[mask] = version_;
                idx_[mask] = static_cast<int>(reach_.size());
                reach_.push_back(mask);
            }
            return idx_[mask];
        };
        intern(1u);
        for (size_t i = 0; i < reach_.size(); ++i) {
            for (Symbol a = 0; a < b_; ++a) {
                uint32_t next_mask = 0;
                uint32_t bits = reach_[i];
                while (bits) {
                    int q = __builtin_ctz(bits);
                    bits &= bits - 1;
                    next_mask |= tmask_[static_cast<size_t>(q) * b_ + a];
                }
                det_.push_back(next_mask ? intern(next_mask) : -1);
            }
        }
        cnt_.assign(reach_.size(), 0);
        cnt_next_.assign(reach_.size(), 0);
        cnt_[0] = 1;
        for (int step = 0; step < n_; ++step) {
            std::fill(cnt_next_.begin(), cnt_next_.end(), 0);
            for (size_t i = 0; i < reach_.size(); ++i) {
                if (cnt_[i] == 0) continue;
                for (Symbol a = 0; a < b_; ++a) {
                    int j = det_[i * static_cast<size_t>(b_) + static_cast<size_t>(a)];
                    if (j >= 0) cnt_next_[static_cast<size_t>(j)] += cnt_[i];
                }
            }
            std::swap(cnt_, cnt_next_);
        }
        uint64_t total = 0;
        uint32_t fbit = 1u << final_state;
        for (size_t i = 0; i < reach_.size(); ++i)
            if (reach_[i] & fbit) total += cnt_[i];
        return total;
    }

    // number of accepting paths spelling w, saturated at 2
    uint8_t count_word_paths_capped(int final_state) {
        pc_.assign(static_cast<size_t>(kmax_), 0);
        pc_next_.assign(static_cast<size_t>(kmax_), 0);
        pc_[0] = 1;
        for (int i = 0; i < n_; ++i) {
            std::fill(pc_next_.begin(), pc_next_.end(), 0);
            for (int q = 0; q < kmax_; ++q) {
                uint64_t c = pc_[static_cast<size_t>(q)];
                if (c == 0) continue;
                uint32_t targets = tmask_[static_cast<size_t>(q) * b_ + w_[i]];
                while (targets) {
                    int t = __builtin_ctz(targets);
                    targets &= targets - 1;
                    uint64_t& slot = pc_next_[static_cast<size_t>(t)];
                    slot = std::min<uint64_t>(slot + c, 2);
                }
            }
            std::swap(pc_, pc_next_);
        }
        return static_cast<uint8_t>(pc_[static_cast<size_t>(final_state)]);
    }

    Nfa materialize(int final_state, int used) const {
        std::vector<Nfa::Transition> ts;
        for (int from = 0; from < used; ++from)
            for (Symbol a = 0; a < b_; ++a) {
                uint32_t targets = tmask_[static_cast<size_t>(from) * b_ + a];
                while (targets) {
                    int to = __builtin_ctz(targets);
                    targets &= targets - 1;
                    ts.emplace_back(from, a, to);
                }
            }
        return Nfa(used, b_, 0, {final_state}, std::move(ts));
    }

    const Word& w_;
    int n_;
    int b_;
    int kmax_;

    std::vector<uint32_t> tmask_; // [state * b + symbol] -> target state bitmask
    LeafKey key_{};
    std::unordered_map<LeafKey, LeafValue, LeafKeyHash> memo_;

    std::vector<uint64_t> min_count_;
    std::vector<uint8_t> unique_;

    // scratch for count_strings / count_word_paths_capped
    std::vector<uint32_t> reach_;
    std::vector<int> det_;
    std::vector<int> stamp_;
    std::vector<int> idx_;
    std::vector<uint64_t> cnt_, cnt_next_, pc_, pc_next_;
    uint64_t witness_max_ = 0;
    bool witness_unique_ = false;
    std::optional<Nfa> witness_;
    int version_ = 0;
};

void check_exact_limits(const Word& w, const SearchLimits& limits) {
    if (w.size() > limits.limit_for(w.alphabet_size))
        throw_limit("SearchLimitExceeded: word length " + std::to_string(w.size()) +
                    " exceeds the exact-search limit " +
                    std::to_string(limits.limit_for(w.alphabet_size)) + " for alphabet size " +
                    std::to_string(w.alphabet_size));
}

uint64_t pow_u64(int base, int exp) {
    uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<uint64_t>(base);
    return r;
}

std::vector<uint64_t> run_min_counts(const Word& w, int kmax) {
    CanonicalSearch search(w, kmax);
    search.run();
    return search.min_count();
}

int h_from_counts(const std::vector<uint64_t>& counts, uint64_t budget) {
    for (size_t k = 1; k < counts.size(); ++k)
        if (counts[k] <= budget) return static_cast<int>(k);
    return -1;
}

} // namespace

std::vector<BigInt> min_count_per_k(const Word& w, int k_max, const SearchLimits& limits) {
    check_exact_limits(w, limits);
    if (k_max < 1 || k_max > hyde_bound(w.size()))
        throw_invalid("InvalidArgument: k_max must lie in [1, floor(n/2)+1]");
    std::vector<BigInt> out(static_cast<size_t>(k_max) + 1, 0);
    if (w.alphabet_size == 1) {
        for (int k = 1; k <= k_max; ++k) out[static_cast<size_t>(k)] = 1;
        return out;
    }
    CanonicalSearch search(w, k_max);
    search.run();
    for (int k = 1; k <= k_max; ++k) out[static_cast<size_t>(k)] = search.min_count()[static_cast<size_t>(k)];
    return out;
}

StructureFunction exact_h(const Word& w, const SearchLimits& limits) {
    check_exact_limits(w, limits);
    int n = w.size();
    StructureFunction sf{SfClass::exact, std::vector<int>(static_cast<size_t>(n) + 1, 1)};
    if (w.alphabet_size == 1) return sf; // one looping state accepts the only length-n word

    auto counts = run_min_counts(w, hyde_bound(n));
    for (int m = 0; m <= n; ++m) {
        int h = h_from_counts(counts, pow_u64(w.alphabet_size, m));
        if (h < 0)
            throw Error(ErrorCode::invariant_violation,
                        "InvariantViolation: no automaton within the state bound for m=" +
                            std::to_string(m));
        sf.values[static_cast<size_t>(m)] = h;
    }
    return sf;
}

int automatic_complexity(const Word& w, const SearchLimits& limits) {
    check_exact_limits(w, limits);
    if (w.alphabet_size == 1) return w.size() == 0 ? 1 : 1;
    CanonicalSearch search(w, hyde_bound(w.size()));
    search.run();
    for (size_t k = 1; k < search.unique_ok().size(); ++k)
        if (search.unique_ok()[k]) return static_cast<int>(k);
    throw Error(ErrorCode::invariant_violation,
                "InvariantViolation: no unique-path automaton within the state bound");
}

int deficiency(const Word& w, const SearchLimits& limits) {
    return hyde_bound(w.size()) - automatic_complexity(w, limits);
}

int g_of(const Word& w, int m, const SearchLimits& limits) {
    int n = w.size();
    if (m < 0 || m > n) throw_invalid("InvalidArgument: m must lie in [0, n]");
    if (w.alphabet_size == 1) return 1;
    int kmax = std::min(m + 1, hyde_bound(n));
    // the bounded search is feasible well beyond the full-table limit
    if (n > limits.limit_for(w.alphabet_size) && n * std::log2(double(kmax + 1)) > 28.0)
        throw_limit("SearchLimitExceeded: bounded search with " + std::to_string(kmax) +
                    " states infeasible for length " + std::to_string(n));
    auto counts = run_min_counts(w, kmax);
    int h = h_from_counts(counts, pow_u64(w.alphabet_size, n - m));
    if (h < 0)
        throw Error(ErrorCode::invariant_violation,
                    "InvariantViolation: g_w(m) exceeded the m+1 state bound");
    return h;
}

namespace {

Word word_from_code(uint64_t code, int n, int b) {
    std::vector<Symbol> syms(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        syms[static_cast<size_t>(i)] = static_cast<Symbol>(code % static_cast<uint64_t>(b));
        code /= static_cast<uint64_t>(b);
    }
    return Word(std::move(syms), b);
}

// true if w is the lexicographic minimum of its orbit under reversal and
// symbol permutations (both preserve every structure function)
bool orbit_canonical(const Word& w) {
    int b = w.alphabet_size;
    if (b > 4) return true; // permutation scan too wide; just process every word
    std::vector<Symbol> perm(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<Symbol> image(w.symbols.size());
    do {
        for (int rev = 0; rev < 2; ++rev) {
            int n = w.size();
            for (int i = 0; i < n; ++i) {
                Symbol s = w[rev ? n - 1 - i : i];
                image[static_cast<size_t>(i)] = perm[static_cast<size_t>(s)];
            }
            if (std::lexicographical_compare(image.begin(), image.end(), w.symbols.begin(),
                                             w.symbols.end()))
                return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

} // namespace

GTable g_table(int n, int m_max, int b, const SearchLimits& limits) {
    if (n < 1) throw_invalid("InvalidArgument: table length must be >= 1");
    if (b < 2) throw_invalid("InvalidAlphabet: tables need alphabet size >= 2");
    if (m_max < 0 || m_max > n) throw_invalid("InvalidArgument: m_max must lie in [0, n]");
    if (n * std::log2(double(b)) > 22.0)
        throw_limit("SearchLimitExceeded: cannot enumerate all words of length " +
                    std::to_string(n));
    (void)limits;

    GTable table;
    table.n = n;
    table.b = b;
    table.entries.assign(static_cast<size_t>(m_max) + 1, 0);
    table.maximizers.assign(static_cast<size_t>(m_max) + 1, Word({}, b));

    int kmax = std::min(m_max + 1, hyde_bound(n));
    uint64_t total = pow_u64(b, n);
    for (uint64_t code = 0; code < total; ++code) {
        Word w = word_from_code(code, n, b);
        if (!orbit_canonical(w)) continue;
        auto counts = run_min_counts(w, kmax);
        for (int m = 0; m <= m_max; ++m) {
            int g = h_from_counts(counts, pow_u64(b, n - m));
            if (g < 0)
                throw Error(ErrorCode::invariant_violation,
                            "InvariantViolation: g exceeded the m+1 state bound");
            if (g > table.entries[static_cast<size_t>(m)]) {
                table.entries[static_cast<size_t>(m)] = g;
                table.maximizers[static_cast<size_t>(m)] = w;
            }
        }
    }
    return table;
}

Nfa exact_witness(const Word& w, int m, const SearchLimits& limits) {
    check_exact_limits(w, limits);
    int n = w.size();
    if (m < 0 || m > n) throw_invalid("InvalidArgument: m must lie in [0, n]");
    if (w.alphabet_size == 1) {
        std::vector<Nfa::Transition> ts;
        if (n > 0) ts.emplace_back(0, 0, 0);
        return Nfa(1, 1, 0, {0}, std::move(ts));
    }
    int k = exact_h(w, limits).at(m);
    CanonicalSearch search(w, k);
    auto witness = search.find_witness(pow_u64(w.alphabet_size, m), false);
    if (!witness)
        throw Error(ErrorCode::invariant_violation, "InvariantViolation: witness search failed");
    return *witness;
}

Nfa a_n_witness(const Word& w, const SearchLimits& limits) {
    check_exact_limits(w, limits);
    if (w.alphabet_size == 1) {
        std::vector<Nfa::Transition> ts;
        if (w.size() > 0) ts.emplace_back(0, 0, 0);
        return Nfa(1, 1, 0, {0}, std::move(ts));
    }
    int k = automatic_complexity(w, limits);
    CanonicalSearch search(w, k);
    auto witness = search.find_witness(1, true);
    if (!witness)
        throw Error(ErrorCode::invariant_violation, "InvariantViolation: witness search failed");
    return *witness;
}

} // namespace acsf
