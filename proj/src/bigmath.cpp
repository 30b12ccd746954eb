#include "bigmath.hpp"

#include <cmath>
#include <cstdio>

namespace acsf {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw_invalid("InvalidRational: zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw_invalid("InvalidRational: cannot parse '" + text + "'");
    }
}

std::string rational_to_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string rational_to_decimal(const Rational& value) {
    double d = value.convert_to<double>();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", d);
    return buf;
}

double log2_big(const BigInt& value) {
    if (value <= 0) throw_invalid("DomainError: log2 of non-positive integer");
    unsigned bits = msb(value); // index of the highest set bit
    if (bits <= 52) {
        return std::log2(value.convert_to<double>());
    }
    BigInt top = value >> (bits - 52);
    return double(bits - 52) + std::log2(top.convert_to<double>());
}

} // namespace acsf
