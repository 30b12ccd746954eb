#ifndef ACSF_ENTROPY_HPP
#define ACSF_ENTROPY_HPP

#include <string>

#include "bigmath.hpp"

namespace acsf {

// binary entropy H(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0
double entropy(double p);

// base-b normalization H(p) / log2(b)
double entropy_b(double p, int b);

// the inverse of H restricted to [0, 1/2], by bisection to 1e-12
double entropy_inv(double y);
double entropy_inv_b(double y, int b);

// exact log2 C(n,k) via big integers, and its distance from n*H(k/n)
double log2_binomial(long n, long k);
double entropy_gap(long n, long k);

// Constants of the piecewise asymptotic upper bound for alphabet size b.
// c_2 = 2 exactly; T(p) = t_slope * p; the bound is linear with slope
// -alpha_b between the entropy piece and the 1-a piece.
struct BoundConstants {
    int b = 2;
    double c_b = 0;
    double L_b = 0;
    double t_slope = 0; // 2 / L_b
    double alpha_b = 0;
    double a1 = 0; // entropy/linear junction of u
    double a2 = 0; // linear/(1-a) junction of u
};

BoundConstants bound_constants(int b);

double t_of_p(double p, int b);

// piecewise upper bound u(a) on the normalized structure function
double u_bound(double a, int b = 2);

// the inverse of u: entropy piece for large p, linear piece below L_b/2,
// capped by 1-p where the trivial chain bound takes over
double psi(double p, int b = 2);

// phi(T, p) = T * Hb(1/2 - p/T) + (1 - T) * c_b on 2p <= T <= 1
double phi(double t, double p, int b);

// the path-count exponent before optimizing the loop fraction r
double delta_fn(double t1, double t2, double r, double p, int b);

// plot-ready table of (a, u(a)) and (p, psi(p)) samples
std::string bounds_csv(int grid, int b);

} // namespace acsf

#endif
