#include "run_stats.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace acsf {

Rational longest_run_cdf(int n, int x, const Rational& p) {
    if (n < 0) throw_invalid("InvalidArgument: negative trial count");
    if (p < 0 || p > 1) throw_invalid("InvalidProbability: p outside [0,1]");
    if (x < 0) return n == 0 ? Rational(1) : Rational(0);
    if (n <= x) return 1;

    Rational q = Rational(1) - p;
    std::vector<Rational> p_pow(static_cast<size_t>(x) + 1);
    p_pow[0] = 1;
    for (int i = 1; i <= x; ++i) p_pow[static_cast<size_t>(i)] = p_pow[static_cast<size_t>(i) - 1] * p;

    std::vector<Rational> f(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= std::min(n, x); ++i) f[static_cast<size_t>(i)] = 1;
    for (int i = x + 1; i <= n; ++i) {
        Rational sum = 0;
        for (int j = 1; j <= x + 1; ++j)
            sum += f[static_cast<size_t>(i - j)] * p_pow[static_cast<size_t>(j - 1)] * q;
        f[static_cast<size_t>(i)] = sum;
    }
    return f[static_cast<size_t>(n)];
}

Rational p_unary_adjacent(int n, int b) {
    if (n < 1) throw_invalid("InvalidArgument: need at least one symbol");
    if (b < 1) throw_invalid("InvalidAlphabet: alphabet size must be >= 1");
    Rational miss(b - 1, b);
    Rational pow = 1;
    for (int i = 0; i < n - 1; ++i) pow *= miss;
    return Rational(1) - pow;
}

Rational run_union_estimate(int n, int b, int s, int r, std::optional<BigInt> coefficient) {
    if (s < 1 || s >= b) throw_invalid("InvalidArity: valence size must lie in [1, b)");
    if (r < 0 || r > n) throw_invalid("InvalidArgument: run length outside [0, n]");
    BigInt coeff = coefficient.value_or(binomial(b, s));
    return Rational(coeff * big_pow(s, static_cast<unsigned long>(r)),
                    big_pow(b, static_cast<unsigned long>(r)));
}

Rational exact_any_valence_run_prob(int n, int b, int s, int r) {
    if (s < 1 || s > b) throw_invalid("InvalidArity: valence size out of range");
    if (r < 1) throw_invalid("InvalidArgument: run length must be >= 1");
    if (n < 0) throw_invalid("InvalidArgument: negative length");
    if (n * std::log2(double(b)) > 20.0)
        throw_limit("SearchLimitExceeded: exhaustive valence probability needs b^n <= 10^6");

    auto valences = all_valences(b, s);
    uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<uint64_t>(b);

    uint64_t hits = 0;
    std::vector<Symbol> word(static_cast<size_t>(n), 0);
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            word[static_cast<size_t>(i)] = static_cast<Symbol>(c % static_cast<uint64_t>(b));
            c /= static_cast<uint64_t>(b);
        }
        bool hit = false;
        for (const Valence& v : valences) {
            int run = 0;
            for (int i = 0; i < n && !hit; ++i) {
                run = v.contains(word[static_cast<size_t>(i)]) ? run + 1 : 0;
                if (run >= r) hit = true;
            }
            if (hit) break;
        }
        if (hit) ++hits;
    }
    return Rational(hits, total);
}

PValueReport run_event_pvalue(int n, int b, Valence valence, int r, const Rational& threshold,
                              bool attach_exhaustive) {
    if (valence.empty()) throw_invalid("InvalidArity: empty valence");
    if ((valence.mask & ~Valence::full(b).mask) != 0)
        throw_invalid("InvalidArity: valence not contained in the alphabet");
    if (r < 1) throw_invalid("InvalidArgument: run length must be >= 1");

    int s = valence.size();
    PValueReport report;
    report.n = n;
    report.b = b;
    report.valence = valence;
    report.run_length = r;
    report.raw_p = Rational(1) - longest_run_cdf(n, r - 1, Rational(s, b));
    report.adjustment = binomial(b, s);
    report.adjusted_p = std::min(Rational(1), Rational(report.adjustment) * report.raw_p);
    report.threshold = threshold;
    report.reject = report.adjusted_p < threshold;
    if (attach_exhaustive && n * std::log2(double(b)) <= 20.0)
        report.exact_any_valence_p = exact_any_valence_run_prob(n, b, s, r);
    return report;
}

Rational prob_restricted_alphabet(int n, int a, AlphabetEvent event) {
    if (a < 2) throw_invalid("InvalidAlphabet: alphabet size must be >= 2");
    if (n < 1) throw_invalid("InvalidArgument: need at least one symbol");
    BigInt an = big_pow(a, static_cast<unsigned long>(n));
    switch (event) {
        case AlphabetEvent::binary_any: {
            BigInt num = binomial(a, 2) * big_pow(2, static_cast<unsigned long>(n)) -
                         BigInt(a) * (a - 2);
            return Rational(num, an);
        }
        case AlphabetEvent::binary_fixed:
            return Rational(big_pow(2, static_cast<unsigned long>(n)), an);
        case AlphabetEvent::ary_minus_one: {
            BigInt num = 0;
            for (int k = 1; k <= a - 1; ++k) {
                BigInt term = binomial(a, k) * big_pow(a - k, static_cast<unsigned long>(n));
                num += (k % 2 == 1) ? term : -term;
            }
            return Rational(num, an);
        }
    }
    throw_invalid("InvalidArgument: unknown alphabet event");
}

int min_threshold_n(int a, const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1) throw_invalid("InvalidProbability: alpha outside (0,1)");
    for (int n = 1; n <= 100000; ++n)
        if (prob_restricted_alphabet(n, a, AlphabetEvent::binary_any) < alpha) return n;
    throw_limit("SearchLimitExceeded: no threshold length below 100000");
}

BestModelReport best_model(const Word& w, const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1) throw_invalid("InvalidProbability: alpha outside (0,1)");
    int n = w.size();
    int b = w.alphabet_size;

    BestModelReport report;
    report.threshold = alpha;

    for (int s = 1; s < b; ++s) {
        for (Valence v : all_valences(b, s)) {
            int longest = 0;
            int position = 0;
            for (const Run& run : maximal_runs(w, v)) {
                if (run.length > longest) {
                    longest = run.length;
                    position = run.start;
                }
            }
            if (longest == 0) continue; // the valence never occurs: no event
            PValueReport ev = run_event_pvalue(n, b, v, longest, alpha);
            ev.position = position;
            report.events.push_back(std::move(ev));
        }
    }

    for (size_t i = 0; i < report.events.size(); ++i) {
        if (report.best_index < 0) {
            report.best_index = static_cast<int>(i);
            continue;
        }
        const PValueReport& cur = report.events[i];
        const PValueReport& best = report.events[static_cast<size_t>(report.best_index)];
        auto rank = [](const PValueReport& e) {
            return std::make_tuple(e.adjusted_p, -e.run_length, e.valence.size(), e.position,
                                   e.valence.mask);
        };
        if (rank(cur) < rank(best)) report.best_index = static_cast<int>(i);
    }

    if (report.best_index >= 0) {
        const PValueReport& best = report.events[static_cast<size_t>(report.best_index)];
        report.reject = best.adjusted_p < alpha;
        report.model_states = n + 1 - best.run_length;
        int s = best.valence.size();
        int m = 0;
        BigInt power = 1;
        BigInt target = big_pow(s, static_cast<unsigned long>(best.run_length));
        while (power < target) {
            power *= b;
            ++m;
        }
        report.model_m = m;
    }
    return report;
}

} // namespace acsf
