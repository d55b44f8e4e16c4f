#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace landauac {

/// Sampled eigenfunction profile. Used both for the radial problem
/// (measure rho d rho) and the 1-D Cartesian problem (measure dx).
struct RadialProfile {
    std::vector<double> grid;    // ascending coordinates
    std::vector<double> values;  // same length
    double norm = 0.0;           // integral of |R|^2 under the measure, pre-rescaling
    int node_count = 0;
};

namespace detail {

/// Composite Simpson integral of samples (x_i, y_i); handles non-uniform
/// spacing by quadratic fits over interval pairs.
double integrate_samples(std::span<const double> x, std::span<const double> y);

/// Number of strict sign changes among samples, ignoring entries below
/// `threshold` in magnitude.
int count_sign_changes(std::span<const double> values, double threshold);

/// Regularized upper incomplete gamma Q(p+1, x) = Gamma(p+1, x) / p!
/// for integer p >= 0.
double regularized_upper_gamma(int p, double x);

void require_ascending_grid(std::span<const double> grid, bool positive_only);

}  // namespace detail
}  // namespace landauac
