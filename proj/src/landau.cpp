#include "landauac/landau.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "landauac/special.hpp"

namespace landauac {

namespace {

// Upper bound on the one-sided tail integral of H_n(xi)^2 e^{-xi^2} dx
// beyond |x - x0| = a, from |H_n(xi)| <= B xi^n for xi >= xi_a with B the
// absolute coefficient sum of H_n.
double cartesian_tail_bound(double g, int n, double a) {
    const double xi_a = std::sqrt(g) * a;
    if (xi_a <= 0.0) return std::numeric_limits<double>::infinity();

    // coefficients of H_n via the recurrence, absolute values summed
    // against xi_a^{j-n}
    std::vector<double> hm{1.0}, h{0.0, 2.0};
    if (n == 0) h = hm;
    for (int j = 1; j < n; ++j) {
        std::vector<double> hp(j + 2, 0.0);
        for (std::size_t i = 0; i < h.size(); ++i) hp[i + 1] += 2.0 * h[i];
        for (std::size_t i = 0; i < hm.size(); ++i) hp[i] -= 2.0 * j * hm[i];
        hm = std::move(h);
        h = std::move(hp);
    }
    double B = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j)
        B += std::abs(h[j]) * std::pow(xi_a, static_cast<double>(j) - n);

    const double t_a = xi_a * xi_a;
    // int_{xi_a}^inf xi^{2n} e^{-xi^2} dxi <= (1/(2 max(xi_a,1))) Gamma(n+1, t_a)
    // for xi_a >= 1; for shorter grids fall back to the full-line value.
    double integral;
    if (xi_a >= 1.0) {
        const double q = detail::regularized_upper_gamma(n, t_a);
        integral = q <= 0.0 ? 0.0
                            : std::exp(std::lgamma(n + 1.0) + std::log(q)) /
                                  (2.0 * xi_a);
    } else {
        integral = 0.5 * std::exp(std::lgamma(n + 0.5));
    }
    return B * B / std::sqrt(g) * integral;
}

}  // namespace

double energy_sq_landau(const PhysicalParams& params,
                        const LandauQuantumNumbers& qn, bool include_k) {
    params.validate();
    if (qn.n < 0)
        throw std::invalid_argument("LandauQuantumNumbers: n must be non-negative");
    const double g = params.coupling();
    const double ksq = include_k ? params.k * params.k : 0.0;
    // 2g(n + 1/2) + g = 2g(n + 1)
    return params.mass * params.mass + ksq +
           2.0 * g * static_cast<double>(static_cast<long>(qn.n) + 1);
}

double energy_landau(const PhysicalParams& params,
                     const LandauQuantumNumbers& qn, bool include_k,
                     bool antiparticle) {
    const double e = std::sqrt(energy_sq_landau(params, qn, include_k));
    return antiparticle ? -e : e;
}

OscillatorGeometry oscillator_center(const PhysicalParams& params, double p_y) {
    params.validate();
    const double g = params.coupling();
    return {-p_y / g, 1.0 / std::sqrt(g)};
}

double nonrel_energy_landau(const PhysicalParams& params,
                            const LandauQuantumNumbers& qn) {
    params.validate();
    if (qn.n < 0)
        throw std::invalid_argument("LandauQuantumNumbers: n must be non-negative");
    const double g = params.coupling();
    return params.mass + g / params.mass * (qn.n + 0.5) + g / (2.0 * params.mass);
}

RadialProfile eigenfunction_landau(const PhysicalParams& params,
                                   const LandauQuantumNumbers& qn,
                                   std::span<const double> x_grid,
                                   bool normalize) {
    params.validate();
    if (qn.n < 0)
        throw std::invalid_argument("eigenfunction_landau: n must be non-negative");
    detail::require_ascending_grid(x_grid, /*positive_only=*/false);

    const double g = params.coupling();
    const double x0 = -qn.p_y / g;
    const double sqrt_g = std::sqrt(g);

    RadialProfile profile;
    profile.grid.assign(x_grid.begin(), x_grid.end());
    profile.values.reserve(x_grid.size());
    double peak = 0.0;
    std::vector<double> integrand;
    integrand.reserve(x_grid.size());
    for (double x : x_grid) {
        const double s = x - x0;
        const double xi = sqrt_g * s;
        const double v = hermite(qn.n, xi) * std::exp(-g * s * s / 2.0);
        profile.values.push_back(v);
        integrand.push_back(v * v);
        peak = std::max(peak, std::abs(v));
    }
    profile.node_count = detail::count_sign_changes(profile.values, 1e-12 * peak);

    const double body = detail::integrate_samples(profile.grid, integrand);
    const double tail_left = cartesian_tail_bound(g, qn.n, x0 - x_grid.front());
    const double tail_right = cartesian_tail_bound(g, qn.n, x_grid.back() - x0);
    const double total = body + tail_left + tail_right;
    profile.norm = total;

    if (normalize) {
        if (!(total > 0.0) || !std::isfinite(total))
            throw std::domain_error("eigenfunction_landau: norm integral is not positive");
        if (tail_left + tail_right > 1e-10 * total)
            throw std::domain_error(
                "eigenfunction_landau: grid too short, Gaussian tail exceeds 1e-10 of the norm");
        const double scale = 1.0 / std::sqrt(total);
        for (double& v : profile.values) v *= scale;
    }
    return profile;
}

std::vector<LandauSpectrumEntry> spectrum_table_landau(
    const PhysicalParams& params, int n_max, double p_y, bool include_k) {
    params.validate();
    if (n_max < 0)
        throw std::invalid_argument("spectrum_table_landau: n_max must be non-negative");
    std::vector<LandauSpectrumEntry> entries;
    entries.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        LandauQuantumNumbers qn{n, p_y};
        LandauSpectrumEntry e;
        e.qn = qn;
        e.include_k = include_k;
        e.energy_sq = energy_sq_landau(params, qn, include_k);
        e.energy = std::sqrt(e.energy_sq);
        e.nonrel_energy = nonrel_energy_landau(params, qn);
        entries.push_back(e);
    }
    return entries;  // already ascending in energy and n
}

std::string landau_csv_header() {
    return "n,p_y,include_k,energy_sq,energy,nonrel_energy";
}

std::string to_csv_row(const LandauSpectrumEntry& entry) {
    char buf[180];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%d,%.17g,%.17g,%.17g", entry.qn.n,
                  entry.qn.p_y, entry.include_k ? 1 : 0, entry.energy_sq,
                  entry.energy, entry.nonrel_energy);
    return buf;
}

}  // namespace landauac
