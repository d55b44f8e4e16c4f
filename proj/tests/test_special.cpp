#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "landauac/special.hpp"

using namespace landauac;

namespace {

// Brute-force oracle: 1F1(-n; b; tau) summed term by term from explicit
// Pochhammer products and factorials.
double kummer_brute(int n, double b, double tau) {
    double sum = 0.0;
    for (int j = 0; j <= n; ++j) {
        double poch_num = 1.0, poch_den = 1.0, fact = 1.0;
        for (int i = 0; i < j; ++i) {
            poch_num *= static_cast<double>(-n + i);
            poch_den *= b + i;
            fact *= i + 1.0;
        }
        sum += poch_num / poch_den * std::pow(tau, j) / fact;
    }
    return sum;
}

double binom(int top, int bottom) {
    double r = 1.0;
    for (int i = 1; i <= bottom; ++i) r *= static_cast<double>(top - bottom + i) / i;
    return r;
}

}  // namespace

TEST_CASE("kummer: base cases and hand expansions") {
    CHECK(kummer_terminating(0, 1.0, 3.7) == 1.0);
    CHECK(kummer_terminating(0, 10.0, 0.1) == 1.0);
    CHECK(kummer_terminating(1, 2.0, 2.0) == 0.0);  // 1 - tau/b
    CHECK(kummer_terminating(1, 4.0, 1.0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("kummer at tau = 0 is exactly 1") {
    for (int n : {0, 1, 2, 5, 17, 60, 170})
        for (double b : {0.5, 1.0, 6.0}) CHECK(kummer_terminating(n, b, 0.0) == 1.0);
}

TEST_CASE("kummer matches the brute-force term sum") {
    for (int n : {2, 3, 7, 12})
        for (double tau : {0.3, 1.0, 4.0, 20.0}) {
            const double got = kummer_terminating(n, 1.0, tau);
            const double want = kummer_brute(n, 1.0, tau);
            // the brute-force oracle itself carries double-rounding error
            CHECK(got == doctest::Approx(want).epsilon(1e-9));
        }
    // reporting struct
    auto e = kummer_terminating_eval(5, 2.0, 1.5);
    CHECK(e.degree == 5);
    CHECK(e.terms_summed == 6);
}

TEST_CASE("kummer rejects invalid arguments") {
    CHECK_THROWS_AS(kummer_terminating(-1, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(kummer_terminating(2, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(kummer_terminating(2, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(kummer_terminating(171, 1.0, 0.0), std::invalid_argument);
    CHECK_NOTHROW(kummer_terminating(170, 1.0, 1.0));
}

TEST_CASE("hermite: explicit low orders") {
    CHECK(hermite(0, 0.37) == 1.0);
    CHECK(hermite(1, 3.0) == 6.0);
    CHECK(hermite(2, 1.0) == 2.0);  // 4x^2 - 2
    for (double x : {-1.7, 0.0, 0.4, 2.5}) {
        CHECK(hermite(2, x) == doctest::Approx(4 * x * x - 2).epsilon(1e-14));
        CHECK(hermite(3, x) ==
              doctest::Approx(8 * x * x * x - 12 * x).epsilon(1e-14));
        CHECK(hermite(4, x) ==
              doctest::Approx(16 * std::pow(x, 4) - 48 * x * x + 12).epsilon(1e-13));
    }
    CHECK_THROWS_AS(hermite(-2, 1.0), std::invalid_argument);
}

TEST_CASE("hermite parity H_n(-x) = (-1)^n H_n(x)") {
    for (int n = 0; n <= 20; ++n)
        for (double x : {0.3, 1.1, 2.7}) {
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            CHECK(hermite(n, -x) ==
                  doctest::Approx(sign * hermite(n, x)).epsilon(1e-12));
        }
}

TEST_CASE("laguerre: explicit low orders and argument checks") {
    CHECK(laguerre_general(0, 0.0, 5.0) == 1.0);
    CHECK(laguerre_general(1, 0.0, 2.0) == -1.0);  // 1 - x
    CHECK_THROWS_AS(laguerre_general(-1, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_general(2, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("kummer-laguerre identity, spot value") {
    // C(5,3) * 1F1(-3; 3; 0.7) = L_3^2(0.7), both sides independent
    const double lhs = binom(5, 3) * kummer_terminating(3, 3.0, 0.7);
    const double rhs = laguerre_general(3, 2.0, 0.7);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("kummer-laguerre identity over the tested grid") {
    for (int n = 0; n <= 20; ++n)
        for (int alpha = 0; alpha <= 6; ++alpha)
            for (double x : {0.0, 0.7, 3.0, 11.0, 27.0, 50.0}) {
                const double lhs =
                    binom(n + alpha, n) * kummer_terminating(n, alpha + 1.0, x);
                const double rhs = laguerre_general(n, alpha, x);
                const double tol = 1e-10 * std::max(1.0, std::abs(rhs));
                CHECK(std::abs(lhs - rhs) <= tol);
            }
}
