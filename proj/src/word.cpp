#include "word.hpp"

#include <algorithm>

namespace acsf {

Word::Word(std::vector<Symbol> syms, int b) : symbols(std::move(syms)), alphabet_size(b) {
    if (b < 1) throw_invalid("InvalidAlphabet: alphabet size must be >= 1");
    if (b > 31) throw_invalid("InvalidAlphabet: alphabet size capped at 31");
    for (Symbol s : symbols) {
        if (s < 0 || s >= b)
            throw_invalid("InvalidSymbol: symbol " + std::to_string(s) +
                          " outside alphabet of size " + std::to_string(b));
    }
}

bool Word::is_unary() const {
    for (Symbol s : symbols)
        if (s != symbols.front()) return false;
    return true;
}

std::string Word::to_string() const {
    std::string out;
    if (alphabet_size <= 10) {
        for (Symbol s : symbols) out.push_back(static_cast<char>('0' + s));
    } else {
        for (size_t i = 0; i < symbols.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(symbols[i]);
        }
    }
    return out;
}

Valence Valence::of(std::initializer_list<Symbol> syms) {
    uint32_t m = 0;
    for (Symbol s : syms) m |= 1u << s;
    return Valence(m);
}

std::vector<Symbol> Valence::members() const {
    std::vector<Symbol> out;
    for (Symbol s = 0; s < 32; ++s)
        if (contains(s)) out.push_back(s);
    return out;
}

Word parse_word(const std::string& text, int alphabet_size) {
    if (alphabet_size < 0) throw_invalid("InvalidAlphabet: negative alphabet size");
    if (alphabet_size == 0 && !text.empty() && text.find(',') == std::string::npos) {
        // leave inference to the digit scan below
    }

    std::vector<Symbol> syms;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
            if (piece.empty()) throw_invalid("InvalidSymbol: empty entry in comma list");
            size_t used = 0;
            int v;
            try {
                v = std::stoi(piece, &used);
            } catch (const std::exception&) {
                throw_invalid("InvalidSymbol: '" + piece + "' is not an integer");
            }
            if (used != piece.size() || v < 0)
                throw_invalid("InvalidSymbol: '" + piece + "' is not a nonnegative integer");
            syms.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw_invalid(std::string("InvalidSymbol: '") + c + "' is not a digit");
            syms.push_back(c - '0');
        }
    }

    int b = alphabet_size;
    if (b == 0) {
        Symbol max_sym = -1;
        for (Symbol s : syms) max_sym = std::max(max_sym, s);
        b = max_sym + 1;
        if (b < 1) b = 1; // empty word
    }
    return Word(std::move(syms), b);
}

std::vector<Run> maximal_runs(const Word& w, Valence v) {
    if (v.empty()) throw_invalid("InvalidArity: empty valence");
    uint32_t full = Valence::full(w.alphabet_size).mask;
    if ((v.mask & ~full) != 0)
        throw_invalid("InvalidArity: valence not contained in the alphabet");

    std::vector<Run> runs;
    int n = w.size();
    int i = 0;
    while (i < n) {
        if (!v.contains(w[i])) {
            ++i;
            continue;
        }
        int j = i;
        while (j < n && v.contains(w[j])) ++j;
        runs.push_back(Run{i, j - i, v});
        i = j;
    }
    return runs;
}

std::vector<Valence> all_valences(int b, int s) {
    if (b < 1) throw_invalid("InvalidAlphabet: alphabet size must be >= 1");
    if (s < 1 || s > b) throw_invalid("InvalidArity: valence size out of range");
    std::vector<Valence> out;
    std::vector<int> idx(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        uint32_t m = 0;
        for (int i : idx) m |= 1u << i;
        out.push_back(Valence(m));
        // next combination in lexicographic order
        int i = s - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == b - s + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<Valence> every_valence(int b) {
    std::vector<Valence> out;
    for (int s = 1; s <= b; ++s) {
        auto vs = all_valences(b, s);
        out.insert(out.end(), vs.begin(), vs.end());
    }
    return out;
}

std::string to_string(Valence v) {
    std::string out = "{";
    bool first = true;
    for (Symbol s : v.members()) {
        if (!first) out += ",";
        out += std::to_string(s);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace acsf
