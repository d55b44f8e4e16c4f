#include "landauac/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace landauac::detail {

double integrate_samples(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2)
        throw std::invalid_argument("integrate_samples: need matching samples, size >= 2");
    if (n == 2) return 0.5 * (x[1] - x[0]) * (y[0] + y[1]);

    double total = 0.0;
    std::size_t i = 0;
    // pairs of intervals, quadratic through three points
    while (i + 2 < n) {
        const double h0 = x[i + 1] - x[i];
        const double h1 = x[i + 2] - x[i + 1];
        const double h = h0 + h1;
        total += h / 6.0 *
                 ((2.0 - h1 / h0) * y[i] + (h * h / (h0 * h1)) * y[i + 1] +
                  (2.0 - h0 / h1) * y[i + 2]);
        i += 2;
    }
    if (i + 1 < n) {
        // odd interval count: quadratic through the last three points,
        // integrated over the final interval only
        const double h0 = x[n - 2] - x[n - 3];
        const double h1 = x[n - 1] - x[n - 2];
        total += y[n - 1] * (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1)) +
                 y[n - 2] * (h1 * h1 + 3.0 * h0 * h1) / (6.0 * h0) -
                 y[n - 3] * h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
    }
    return total;
}

int count_sign_changes(std::span<const double> values, double threshold) {
    int changes = 0;
    double last = 0.0;
    for (double v : values) {
        if (std::abs(v) <= threshold) continue;
        if (last != 0.0 && ((v > 0.0) != (last > 0.0))) ++changes;
        last = v;
    }
    return changes;
}

double regularized_upper_gamma(int p, double x) {
    if (p < 0 || !(x >= 0.0))
        throw std::invalid_argument("regularized_upper_gamma: bad arguments");
    // Q(p+1, x) = exp(-x) * sum_{j=0}^{p} x^j / j!
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j <= p; ++j) {
        term *= x / j;
        sum += term;
    }
    return std::exp(-x) * sum;
}

void require_ascending_grid(std::span<const double> grid, bool positive_only) {
    if (grid.empty())
        throw std::invalid_argument("grid must be non-empty");
    double prev = positive_only ? 0.0 : -std::numeric_limits<double>::infinity();
    for (double g : grid) {
        if (!std::isfinite(g) || !(g > prev))
            throw std::invalid_argument(
                positive_only ? "grid must be strictly ascending and positive"
                              : "grid must be strictly ascending");
        prev = g;
    }
}

}  // namespace landauac::detail
