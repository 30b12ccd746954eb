#include "entropy.hpp"

#include <cmath>
#include <cstdio>

#include "errors.hpp"

namespace acsf {

namespace {

constexpr double kDomainSlack = 1e-12;

void require_unit(double v, const char* what) {
    if (!(v >= -kDomainSlack && v <= 1 + kDomainSlack))
        throw_invalid(std::string("DomainError: ") + what + " outside [0,1]");
}

void require_b(int b) {
    if (b < 2) throw_invalid("InvalidAlphabet: bounds need alphabet size >= 2");
}

} // namespace

double entropy(double p) {
    require_unit(p, "entropy argument");
    if (p <= 0 || p >= 1) return 0.0;
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

double entropy_b(double p, int b) {
    require_b(b);
    return entropy(p) / std::log2(double(b));
}

double entropy_inv(double y) {
    require_unit(y, "inverse entropy argument");
    if (y <= 0) return 0.0;
    if (y >= 1) return 0.5;
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        (entropy(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double entropy_inv_b(double y, int b) {
    require_b(b);
    return entropy_inv(y * std::log2(double(b)));
}

double log2_binomial(long n, long k) {
    if (k < 0 || k > n) throw_invalid("InvalidArgument: k outside [0, n]");
    return log2_big(binomial(n, k));
}

double entropy_gap(long n, long k) {
    double lhs = log2_binomial(n, k);
    double rhs = n == 0 ? 0.0 : double(n) * entropy(double(k) / double(n));
    return std::fabs(lhs - rhs);
}

BoundConstants bound_constants(int b) {
    require_b(b);
    BoundConstants c;
    c.b = b;
    double frac = double(b) / double(b + 2);
    c.c_b = 1.0 + entropy_b(frac, b) + (1.0 - 1.0 / std::log2(double(b))) * frac;
    double inner = 4.0 / (double(b) * double(b + 2));
    c.L_b = std::sqrt(1.0 - inner * inner);
    c.t_slope = 2.0 / c.L_b;
    c.a1 = entropy_b(0.5 - c.L_b / 2.0, b);
    c.alpha_b = (2.0 / c.L_b) * (c.c_b - c.a1);
    c.a2 = (c.alpha_b - c.c_b) / (c.alpha_b - 1.0);
    return c;
}

double t_of_p(double p, int b) {
    return bound_constants(b).t_slope * p;
}

double u_bound(double a, int b) {
    require_unit(a, "bound argument");
    BoundConstants c = bound_constants(b);
    if (a <= c.a1) return 0.5 - entropy_inv_b(a, b);
    if (a <= c.a2) return (c.c_b - a) / c.alpha_b;
    return 1.0 - a;
}

double psi(double p, int b) {
    if (!(p >= -kDomainSlack && p <= 0.5 + kDomainSlack))
        throw_invalid("DomainError: psi argument outside [0, 1/2]");
    BoundConstants c = bound_constants(b);
    double value = (p >= c.L_b / 2.0) ? entropy_b(0.5 - p, b) : c.c_b - c.alpha_b * p;
    return std::min(value, 1.0 - p); // the trivial chain bound caps the inverse
}

double phi(double t, double p, int b) {
    require_b(b);
    if (!(p >= -kDomainSlack && p <= 0.5 + kDomainSlack))
        throw_invalid("DomainError: phi needs 0 <= p <= 1/2");
    if (!(t >= 2 * p - kDomainSlack && t <= 1 + kDomainSlack) || t <= 0)
        throw_invalid("DomainError: phi needs 2p <= T <= 1");
    BoundConstants c = bound_constants(b);
    return t * entropy_b(0.5 - p / t, b) + (1 - t) * c.c_b;
}

double delta_fn(double t1, double t2, double r, double p, int b) {
    require_b(b);
    if (t1 <= 0 || t2 <= 0 || t1 < p - kDomainSlack || t2 < p - kDomainSlack)
        throw_invalid("DomainError: delta needs T_i >= p > 0");
    double rest = 1.0 - t1 - t2;
    if (rest < -kDomainSlack || r < -kDomainSlack || r > rest + kDomainSlack)
        throw_invalid("DomainError: delta needs 0 <= r <= 1 - T_1 - T_2");
    double total = t1 * entropy_b(0.5 - p / (2 * t1), b) + t2 * entropy_b(0.5 - p / (2 * t2), b);
    if (rest > 0)
        total += rest * entropy_b(std::clamp(r / rest, 0.0, 1.0), b) + rest +
                 (1.0 - 1.0 / std::log2(double(b))) * r;
    return total;
}

std::string bounds_csv(int grid, int b) {
    if (grid < 2) throw_invalid("InvalidArgument: grid must have at least 2 points");
    BoundConstants c = bound_constants(b);
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof(buf), "# b=%d c_b=%.17g L_b=%.17g alpha_b=%.17g a1=%.17g a2=%.17g\n",
                  c.b, c.c_b, c.L_b, c.alpha_b, c.a1, c.a2);
    out += buf;
    out += "kind,x,y\n";
    for (int i = 0; i < grid; ++i) {
        double a = double(i) / double(grid - 1);
        std::snprintf(buf, sizeof(buf), "u,%.12g,%.12g\n", a, u_bound(a, b));
        out += buf;
    }
    for (int i = 0; i < grid; ++i) {
        double p = 0.5 * double(i) / double(grid - 1);
        std::snprintf(buf, sizeof(buf), "psi,%.12g,%.12g\n", p, psi(p, b));
        out += buf;
    }
    return out;
}

} // namespace acsf
