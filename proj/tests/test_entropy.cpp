#include <doctest.h>

#include <cmath>

#include "entropy.hpp"
#include "errors.hpp"

using namespace acsf;

TEST_CASE("entropy basics") {
    CHECK(entropy(0.5) == 1.0);
    CHECK(entropy(0.0) == 0.0);
    CHECK(entropy(1.0) == 0.0);
    CHECK(entropy(0.3) == doctest::Approx(entropy(0.7)).epsilon(1e-15));
    CHECK_THROWS_AS(entropy(1.5), Error);

    // concavity on a grid
    for (int i = 1; i < 50; ++i) {
        double p = i / 100.0;
        CHECK(entropy(p) >= (entropy(p - 0.01) + entropy(p + 0.01)) / 2 - 1e-12);
    }
}

TEST_CASE("inverse entropy roundtrips") {
    CHECK(entropy_inv(entropy(0.3)) == doctest::Approx(0.3).epsilon(1e-10));
    for (int i = 0; i <= 50; ++i) {
        double x = i / 100.0;
        CHECK(entropy_inv(entropy(x)) == doctest::Approx(x).epsilon(1e-10));
    }
    CHECK(entropy_inv(0.0) == 0.0);
    CHECK(entropy_inv(1.0) == 0.5);
    CHECK_THROWS_AS(entropy_inv(-0.2), Error);
}

TEST_CASE("exact log-binomials") {
    CHECK(log2_binomial(10, 0) == 0.0);
    CHECK(entropy_gap(10, 0) == 0.0);
    CHECK(log2_binomial(4, 2) == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
    CHECK(log2_binomial(4096, 2048) > 4000); // far beyond double overflow if done naively
}

TEST_CASE("central binomial entropy gap stays logarithmic") {
    // C(n+2, n/2+1) = C(n, n/2) * (n+1)(n+2) / (n/2+1)^2, walked incrementally
    BigInt central = 2; // C(2,1)
    for (long n = 2; n <= 4096; n += 2) {
        double gap = std::fabs(log2_big(central) - double(n) * entropy(0.5));
        CHECK(gap <= 2.0 * std::log2(double(n) + 1.0));
        BigInt half = n / 2 + 1;
        central = central * (n + 1) * (n + 2) / (half * half);
    }
    // the incremental walk agrees with the direct evaluation
    CHECK(entropy_gap(64, 32) == doctest::Approx(std::fabs(log2_binomial(64, 32) - 64.0))
                                     .epsilon(1e-12));
}

TEST_CASE("bound constants for the binary alphabet") {
    BoundConstants c = bound_constants(2);
    CHECK(c.c_b == 2.0); // exactly, since H(1/2) = 1 in floating point
    CHECK(c.L_b == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
    CHECK(c.t_slope == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(c.alpha_b == doctest::Approx(3.79994).epsilon(2e-5));

    // alpha equals the entropy derivative at 1/2 - sqrt(3)/4
    double x = 0.5 - std::sqrt(3.0) / 4.0;
    double derivative = std::log2((1.0 - x) / x);
    CHECK(std::fabs(c.alpha_b - derivative) < 1e-4);

    CHECK(c.a1 == doctest::Approx(entropy(x)).epsilon(1e-12));
    CHECK(c.a2 == doctest::Approx((c.alpha_b - 2.0) / (c.alpha_b - 1.0)).epsilon(1e-12));
}

TEST_CASE("u bound pieces and continuity") {
    BoundConstants c = bound_constants(2);
    CHECK(u_bound(1.0, 2) == 0.0);
    CHECK(u_bound(0.0, 2) == doctest::Approx(0.5).epsilon(1e-12));

    // both formulas agree at the junctions
    double left_a1 = 0.5 - entropy_inv(c.a1);
    double right_a1 = (c.c_b - c.a1) / c.alpha_b;
    CHECK(std::fabs(left_a1 - right_a1) < 1e-9);
    CHECK(left_a1 == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-9));

    double left_a2 = (c.c_b - c.a2) / c.alpha_b;
    double right_a2 = 1.0 - c.a2;
    CHECK(std::fabs(left_a2 - right_a2) < 1e-9);
    CHECK(left_a2 == doctest::Approx(0.35715).epsilon(1e-4));

    for (int i = 0; i < 200; ++i) {
        double a = i / 200.0;
        CHECK(u_bound(a, 2) >= u_bound(a + 1.0 / 200.0, 2) - 1e-12);
    }
}

TEST_CASE("psi is the inverse of u") {
    CHECK(psi(0.5, 2) == 0.0);
    for (int i = 1; i <= 49; ++i) {
        double p = i / 100.0;
        CHECK(u_bound(psi(p, 2), 2) == doctest::Approx(p).epsilon(1e-8));
    }
    // nonincreasing and continuous on a fine grid
    double prev = psi(0.0, 2);
    for (int i = 1; i <= 500; ++i) {
        double cur = psi(0.5 * i / 500.0, 2);
        CHECK(cur <= prev + 1e-12);
        CHECK(std::fabs(cur - prev) < 0.01);
        prev = cur;
    }
}

TEST_CASE("phi at T = 1 is the entropy of the complementary rate") {
    for (double p : {0.05, 0.2, 0.35, 0.5})
        CHECK(phi(1.0, p, 2) == doctest::Approx(entropy(0.5 - p)).epsilon(1e-12));
}

TEST_CASE("delta at the stationary loop fraction reproduces phi") {
    for (double p : {0.05, 0.1, 0.2}) {
        for (double t : {0.5, 0.7, 0.9}) {
            double r = (1.0 - t) * 2.0 / 4.0; // b/(b+2) of the remainder
            CHECK(delta_fn(t / 2, t / 2, r, p, 2) == doctest::Approx(phi(t, p, 2)).epsilon(1e-12));
        }
    }
}

TEST_CASE("splitting the approach times never helps") {
    for (double p : {0.05, 0.1, 0.2}) {
        for (double t : {0.5, 0.7, 0.9}) {
            double r = (1.0 - t) / 3.0;
            double center = delta_fn(t / 2, t / 2, r, p, 2);
            double cap = t / 2 - p;
            for (int i = 1; i <= 10; ++i) {
                double eps = cap * i / 11.0;
                CHECK(delta_fn(t / 2 + eps, t / 2 - eps, r, p, 2) <= center + 1e-12);
            }
        }
    }
}

TEST_CASE("the stationary loop fraction has vanishing derivative") {
    double h = 1e-4;
    for (double p : {0.1, 0.2}) {
        for (double t : {0.4, 0.6, 0.8}) {
            double r = (1.0 - t) * 2.0 / 4.0;
            double diff =
                (delta_fn(t / 2, t / 2, r + h, p, 2) - delta_fn(t / 2, t / 2, r - h, p, 2)) /
                (2 * h);
            CHECK(std::fabs(diff) < 1e-6);
        }
    }
}

TEST_CASE("phi grows in T exactly below the critical time") {
    double h = 1e-5;
    for (double p : {0.05, 0.1, 0.2, 0.3, 0.4}) {
        double critical = t_of_p(p, 2);
        for (double t = 2 * p + 0.01; t < 1.0 - h; t += 0.01) {
            if (std::fabs(t - critical) < 5e-3) continue;
            double slope = (phi(t + h, p, 2) - phi(t - h, p, 2)) / (2 * h);
            if (t < critical)
                CHECK(slope > 0);
            else
                CHECK(slope < 0);
        }
    }
}

TEST_CASE("csv table carries the constants and endpoints") {
    std::string csv = bounds_csv(5, 2);
    CHECK(csv.find("c_b=2 ") != std::string::npos);
    CHECK(csv.find("kind,x,y") != std::string::npos);
    CHECK(csv.find("u,1,0") != std::string::npos);
    CHECK_THROWS_AS(bounds_csv(1, 2), Error);
    CHECK(bounds_csv(5, 2) == csv); // byte-identical on repetition
}
