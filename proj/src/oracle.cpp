#include "landauac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace landauac {

namespace {

constexpr double kEnvelopeCeiling = 1e-12;

void check_finite_assembly(std::span<const double> diag,
                           std::span<const double> off) {
    for (double v : diag)
        if (!std::isfinite(v))
            throw std::domain_error("oracle: non-finite matrix entry in assembly");
    for (double v : off)
        if (!std::isfinite(v))
            throw std::domain_error("oracle: non-finite matrix entry in assembly");
}

}  // namespace

void GridSpec::validate() const {
    if (n_points < 100)
        throw std::invalid_argument("GridSpec: n_points must be >= 100");
    if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_min < x_max))
        throw std::invalid_argument("GridSpec: need finite x_min < x_max");
}

std::string OracleResult::to_json() const {
    nlohmann::json j;
    j["eigenvalues"] = eigenvalues;
    j["grid"] = {{"n_points", grid.n_points},
                 {"x_min", grid.x_min},
                 {"x_max", grid.x_max}};
    j["richardson_estimate"] = richardson_estimate;
    j["max_rel_discrepancy"] = max_rel_discrepancy;
    return j.dump();
}

OracleResult radial_fd_spectrum(const PhysicalParams& params, int l,
                                const GridSpec& grid, int m_levels) {
    params.validate();
    grid.validate();
    if (m_levels < 1)
        throw std::invalid_argument("radial_fd_spectrum: m_levels must be >= 1");
    if (grid.x_min != 0.0)
        throw std::invalid_argument(
            "radial_fd_spectrum: the radial domain starts at 0 (cell-centered "
            "grid; the first cell edge carries the rho=0 boundary)");

    const double g = params.coupling();
    // Gaussian envelope exp(-g rho^2/4) must be negligible at the outer wall
    if (std::exp(-g * grid.x_max * grid.x_max / 4.0) > kEnvelopeCeiling)
        throw std::domain_error(
            "radial_fd_spectrum: domain too small, Gaussian envelope at x_max "
            "exceeds 1e-12 of its peak");

    const int n = grid.n_points;
    const double h = grid.spacing();
    std::vector<double> diag(n), off(n - 1), rho(n);
    for (int i = 0; i < n; ++i) {
        rho[i] = (i + 0.5) * h;
        const double ll = static_cast<double>(l) * l;
        const double v = ll / (rho[i] * rho[i]) + g * g * rho[i] * rho[i] / 4.0 +
                         l * g + g;
        diag[i] = 2.0 / (h * h) + v;
    }
    for (int i = 0; i + 1 < n; ++i) {
        // flux through the cell edge at rho = (i+1) h, symmetrized by
        // the diagonal similarity D = diag(sqrt(rho_i))
        off[i] = -((i + 1) * h) / (h * h * std::sqrt(rho[i] * rho[i + 1]));
    }
    check_finite_assembly(diag, off);

    OracleResult result;
    result.grid = grid;
    result.eigenvalues = detail::tridiag_lowest_eigenvalues(diag, off, m_levels);
    return result;
}

OracleResult cartesian_fd_spectrum(const PhysicalParams& params, double p_y,
                                   const GridSpec& grid, int m_levels) {
    params.validate();
    grid.validate();
    if (m_levels < 1)
        throw std::invalid_argument("cartesian_fd_spectrum: m_levels must be >= 1");

    const double g = params.coupling();
    const double x0 = -p_y / g;
    const double span_left = x0 - grid.x_min;
    const double span_right = grid.x_max - x0;
    if (span_left <= 0.0 || span_right <= 0.0 ||
        std::exp(-g * span_left * span_left / 2.0) > kEnvelopeCeiling ||
        std::exp(-g * span_right * span_right / 2.0) > kEnvelopeCeiling)
        throw std::domain_error(
            "cartesian_fd_spectrum: domain too small around the oscillator "
            "center, Gaussian envelope at a wall exceeds 1e-12 of its peak");

    const int n = grid.n_points;  // cells; interior nodes n-1
    const double h = grid.spacing();
    std::vector<double> diag(n - 1), off(n - 2, -1.0 / (h * h));
    for (int i = 1; i < n; ++i) {
        const double x = grid.x_min + i * h;
        const double w = g * x + p_y;  // (mu lambda)(x - x0)
        diag[i - 1] = 2.0 / (h * h) + w * w;
    }
    check_finite_assembly(diag, off);

    OracleResult result;
    result.grid = grid;
    result.eigenvalues = detail::tridiag_lowest_eigenvalues(diag, off, m_levels);
    return result;
}

OracleResult richardson_refine(const OracleResult& coarse,
                               const OracleResult& fine) {
    if (fine.grid.n_points != 2 * coarse.grid.n_points ||
        fine.grid.x_min != coarse.grid.x_min ||
        fine.grid.x_max != coarse.grid.x_max)
        throw std::invalid_argument(
            "richardson_refine: fine grid must double n_points over the same domain");
    if (fine.eigenvalues.size() != coarse.eigenvalues.size())
        throw std::invalid_argument("richardson_refine: level count mismatch");

    OracleResult result = fine;
    result.richardson_estimate.resize(fine.eigenvalues.size());
    for (std::size_t i = 0; i < fine.eigenvalues.size(); ++i)
        result.richardson_estimate[i] =
            (4.0 * fine.eigenvalues[i] - coarse.eigenvalues[i]) / 3.0;
    return result;
}

void set_reference_discrepancy(OracleResult& result,
                               std::span<const double> references) {
    const std::vector<double>& values = result.richardson_estimate.empty()
                                            ? result.eigenvalues
                                            : result.richardson_estimate;
    if (references.size() != values.size())
        throw std::invalid_argument("set_reference_discrepancy: size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        worst = std::max(worst,
                         std::abs(values[i] - references[i]) / std::abs(references[i]));
    result.max_rel_discrepancy = worst;
}

namespace detail {

namespace {

// Number of eigenvalues strictly below x, by the Sturm sequence of the
// shifted LDL^T factorization.
int sturm_count(std::span<const double> diag, std::span<const double> off,
                double x) {
    constexpr double pivmin = 1e-300;
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (q == 0.0) q = pivmin;
        q = diag[i] - x - off[i - 1] * off[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> tridiag_lowest_eigenvalues(std::span<const double> diag,
                                               std::span<const double> off,
                                               int m) {
    const int n = static_cast<int>(diag.size());
    if (n < 2 || off.size() + 1 != diag.size())
        throw std::invalid_argument("tridiag_lowest_eigenvalues: bad dimensions");
    if (m < 1 || m > n)
        throw std::invalid_argument("tridiag_lowest_eigenvalues: bad level count");

    // Gershgorin bounds
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }

    std::vector<double> eigenvalues(m);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int j = 0; j < m; ++j) {
        double a = lo, b = hi;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            if (sturm_count(diag, off, mid) >= j + 1)
                b = mid;
            else
                a = mid;
            if (b - a <= 2.0 * eps * (std::abs(a) + std::abs(b)) + 1e-306) break;
        }
        eigenvalues[j] = 0.5 * (a + b);
    }
    return eigenvalues;
}

}  // namespace detail
}  // namespace landauac
