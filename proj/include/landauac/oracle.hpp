#pragma once

#include <span>
#include <string>
#include <vector>

#include "landauac/params.hpp"

namespace landauac {

/// Uniform finite-difference grid: n_points cells between x_min and x_max.
/// Doubling n_points halves the mesh spacing exactly, which is what the
/// Richardson step assumes.
struct GridSpec {
    int n_points = 4000;
    double x_min = 0.0;
    double x_max = 10.0;

    double spacing() const { return (x_max - x_min) / n_points; }
    void validate() const;
};

struct OracleResult {
    std::vector<double> eigenvalues;           // lowest m, ascending
    GridSpec grid;
    std::vector<double> richardson_estimate;   // empty until refined
    double max_rel_discrepancy = 0.0;          // vs supplied references

    std::string to_json() const;
};

/// Lowest eigenvalues eps = E^2 - m^2 - k^2 of the radial operator
///   -R'' - R'/rho + [l^2/rho^2 + (mu lambda)^2 rho^2/4 + l mu lambda
///                    + mu lambda] R = eps R
/// by a conservative cell-centered discretization on [0, x_max] (the
/// Sturm-Liouville form keeps the matrix symmetrizable to tridiagonal and
/// handles the rho = 0 endpoint without a regularization cutoff).
/// No closed-form energy formula is used anywhere in this module.
OracleResult radial_fd_spectrum(const PhysicalParams& params, int l,
                                const GridSpec& grid, int m_levels = 5);

/// Lowest eigenvalues of -d^2/dx^2 + (mu lambda)^2 (x + p_y/(mu lambda))^2
/// with Dirichlet endpoints; adding mu lambda to each gives
/// eps = E^2 - m^2 - [k^2].
OracleResult cartesian_fd_spectrum(const PhysicalParams& params, double p_y,
                                   const GridSpec& grid, int m_levels = 5);

/// Per-eigenvalue extrapolation (4 fine - coarse)/3, removing the O(h^2)
/// error of the second-order stencils. Requires fine.n_points ==
/// 2 * coarse.n_points over the same domain.
OracleResult richardson_refine(const OracleResult& coarse,
                               const OracleResult& fine);

/// Fills max_rel_discrepancy against analytic reference values supplied by
/// the caller (the oracle itself never computes them). Uses the Richardson
/// estimates when present, the raw eigenvalues otherwise.
void set_reference_discrepancy(OracleResult& result,
                               std::span<const double> references);

namespace detail {

/// Lowest m eigenvalues of the symmetric tridiagonal matrix with diagonal
/// `diag` and subdiagonal `off`, by Sturm-sequence bisection inside the
/// Gershgorin bounds. Deterministic, ascending output.
std::vector<double> tridiag_lowest_eigenvalues(std::span<const double> diag,
                                               std::span<const double> off,
                                               int m);

}  // namespace detail
}  // namespace landauac
