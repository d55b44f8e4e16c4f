#include "landauac/special.hpp"

#include <stdexcept>

namespace landauac {

namespace {
constexpr int kMaxDegree = 170;
}

PolynomialEval kummer_terminating_eval(int n, double b, double tau) {
    if (n < 0)
        throw std::invalid_argument("kummer_terminating: n must be non-negative");
    if (n > kMaxDegree)
        throw std::invalid_argument("kummer_terminating: degree exceeds 170");
    if (!(b > 0.0))
        throw std::invalid_argument("kummer_terminating: b must be positive");

    // term_{j+1} = term_j * (j - n) / ((b + j)(j + 1)) * tau; accumulated in
    // quad precision since the alternating sum cancels strongly for large
    // tau (intermediate terms can exceed the result by ~12 orders)
    __float128 sum = 1.0;
    __float128 term = 1.0;
    for (int j = 0; j < n; ++j) {
        term *= (static_cast<__float128>(j) - n) /
                ((static_cast<__float128>(b) + j) * (j + 1)) * tau;
        sum += term;
    }
    return {n, static_cast<double>(sum), n + 1};
}

double kummer_terminating(int n, double b, double tau) {
    return kummer_terminating_eval(n, b, tau).value;
}

double hermite(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite: n must be non-negative");
    if (n > kMaxDegree) throw std::invalid_argument("hermite: degree exceeds 170");
    if (n == 0) return 1.0;
    double hm = 1.0;        // H_0
    double h = 2.0 * x;     // H_1
    for (int j = 1; j < n; ++j) {
        const double hp = 2.0 * x * h - 2.0 * j * hm;
        hm = h;
        h = hp;
    }
    return h;
}

double laguerre_general(int n, double alpha, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_general: n must be non-negative");
    if (n > kMaxDegree) throw std::invalid_argument("laguerre_general: degree exceeds 170");
    if (!(alpha > -1.0))
        throw std::invalid_argument("laguerre_general: alpha must exceed -1");
    if (n == 0) return 1.0;
    const long double a = alpha, xx = x;
    long double lm = 1.0L;          // L_0
    long double l = 1.0L + a - xx;  // L_1
    for (int j = 1; j < n; ++j) {
        const long double lp =
            ((2.0L * j + 1.0L + a - xx) * l - (j + a) * lm) / (j + 1.0L);
        lm = l;
        l = lp;
    }
    return static_cast<double>(l);
}

}  // namespace landauac
