#pragma once

namespace landauac {

/// Result of evaluating a terminating hypergeometric series.
struct PolynomialEval {
    int degree = 0;
    double value = 0.0;
    int terms_summed = 0;  // degree + 1 for a terminating series
};

/// Confluent hypergeometric 1F1(-n; b; tau) for integer n >= 0, as the
/// finite sum over j <= n with Pochhammer ratios accumulated
/// multiplicatively. Degree is capped at 170 (double-precision overflow
/// boundary for the intermediate monomials).
PolynomialEval kummer_terminating_eval(int n, double b, double tau);
double kummer_terminating(int n, double b, double tau);

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite(int n, double x);

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term
/// recurrence; used to cross-check the Kummer evaluation through
/// L_n^alpha(x) = C(n+alpha, n) 1F1(-n; alpha+1; x).
double laguerre_general(int n, double alpha, double x);

}  // namespace landauac
