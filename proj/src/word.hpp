#ifndef ACSF_WORD_HPP
#define ACSF_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace acsf {

using Symbol = int;

// A finite word over the alphabet {0, ..., alphabet_size-1}.
struct Word {
    std::vector<Symbol> symbols;
    int alphabet_size = 1;

    Word() = default;
    Word(std::vector<Symbol> syms, int b);

    int size() const { return static_cast<int>(symbols.size()); }
    Symbol operator[](int i) const { return symbols[static_cast<size_t>(i)]; }
    bool is_unary() const;

    std::string to_string() const;

    bool operator==(const Word&) const = default;
};

// A nonempty sub-alphabet, stored as a bitmask over symbols 0..31.
struct Valence {
    uint32_t mask = 0;

    Valence() = default;
    explicit Valence(uint32_t m) : mask(m) {}
    static Valence of(std::initializer_list<Symbol> syms);
    static Valence full(int b) { return Valence((b >= 32) ? ~0u : ((1u << b) - 1u)); }

    bool contains(Symbol s) const { return (mask >> s) & 1u; }
    int size() const { return __builtin_popcount(mask); }
    bool empty() const { return mask == 0; }
    std::vector<Symbol> members() const;

    bool operator==(const Valence&) const = default;
    auto operator<=>(const Valence&) const = default;
};

// A maximal contiguous block of a word whose symbols all lie in `valence`.
struct Run {
    int start = 0;
    int length = 0;
    Valence valence;

    int end() const { return start + length; } // one past the last position
    bool operator==(const Run&) const = default;
};

// Parses a digit string ("0100") or a comma-separated list ("0,1,0,0").
// alphabet_size 0 means infer b = max symbol + 1 (1 for the empty word).
Word parse_word(const std::string& text, int alphabet_size = 0);

// All maximal runs of w over v, sorted by start position.
std::vector<Run> maximal_runs(const Word& w, Valence v);

// All C(b,s) valences of size s, in lexicographic order of member lists.
std::vector<Valence> all_valences(int b, int s);

// All 2^b - 1 nonempty valences, sizes ascending, lex within a size.
std::vector<Valence> every_valence(int b);

std::string to_string(Valence v);

} // namespace acsf

#endif
