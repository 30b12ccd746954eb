#ifndef ACSF_BIGMATH_HPP
#define ACSF_BIGMATH_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace acsf {

// All combinatorial counts are exact; probabilities are exact rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(BigInt base, unsigned long exp) {
    BigInt result = 1;
    while (exp != 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (long i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1; // exact: c is always an integer after this division
    }
    return c;
}

// Parses "num/den" or "num"; used for CLI thresholds and probabilities.
Rational parse_rational(const std::string& text);

// "num/den" in lowest terms.
std::string rational_to_string(const Rational& value);

// Decimal rendering with 6 significant digits, presentation only.
std::string rational_to_decimal(const Rational& value);

// log2 of a positive integer, usable far beyond double range.
double log2_big(const BigInt& value);

} // namespace acsf

#endif
