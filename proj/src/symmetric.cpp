#include "landauac/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "landauac/special.hpp"

namespace landauac {

namespace {

// Integer Landau-level shift n + (|l|+l)/2 + 1.
long level_shift(const SymmetricQuantumNumbers& qn) {
    if (qn.n < 0)
        throw std::invalid_argument("SymmetricQuantumNumbers: n must be non-negative");
    return static_cast<long>(qn.n) + (std::labs(qn.l) + static_cast<long>(qn.l)) / 2 + 1;
}

// Upper bound on the norm integral of |R|^2 rho d rho beyond rho = a,
// from |F(tau)| <= A tau^n for tau >= tau_a with A the absolute
// coefficient sum of the terminating Kummer series.
double radial_tail_bound(double g, int n, int abs_l, double a) {
    const double tau_a = g * a * a / 2.0;
    if (tau_a <= 0.0) return std::numeric_limits<double>::infinity();
    // A = sum_j |c_j| tau_a^{j-n}, c_j the coefficients of 1F1(-n; |l|+1; tau),
    // so |F(tau)| <= A tau^n for tau >= tau_a
    double A = 0.0;
    double coeff = 1.0;  // |c_0| = 1
    for (int j = 0; j <= n; ++j) {
        if (j > 0)
            coeff *= static_cast<double>(n - j + 1) / ((abs_l + j) * static_cast<double>(j));
        A += coeff * std::pow(tau_a, static_cast<double>(j - n));
    }
    const int p = abs_l + 2 * n;
    const double q = detail::regularized_upper_gamma(p, tau_a);
    if (q <= 0.0) return 0.0;
    return std::exp(2.0 * std::log(A) - std::log(g) + std::lgamma(p + 1.0) + std::log(q));
}

}  // namespace

double energy_sq_symmetric(const PhysicalParams& params,
                           const SymmetricQuantumNumbers& qn, bool include_k) {
    params.validate();
    const double g = params.coupling();
    const double ksq = include_k ? params.k * params.k : 0.0;
    return params.mass * params.mass + ksq + 2.0 * g * static_cast<double>(level_shift(qn));
}

double energy_symmetric(const PhysicalParams& params,
                        const SymmetricQuantumNumbers& qn, bool include_k,
                        bool antiparticle) {
    const double e = std::sqrt(energy_sq_symmetric(params, qn, include_k));
    return antiparticle ? -e : e;
}

double beta_parameter(const PhysicalParams& params, double energy_sq, int l) {
    params.validate();
    const double g = params.coupling();
    const double eps = energy_sq - params.mass * params.mass - params.k * params.k;
    return eps / (2.0 * g) - l / 2.0 - 0.5;
}

double nonrel_energy_symmetric(const PhysicalParams& params,
                               const SymmetricQuantumNumbers& qn) {
    params.validate();
    return params.mass +
           params.coupling() / params.mass * static_cast<double>(level_shift(qn));
}

RadialProfile radial_wavefunction(const PhysicalParams& params,
                                  const SymmetricQuantumNumbers& qn,
                                  std::span<const double> rho_grid,
                                  bool normalize) {
    params.validate();
    if (qn.n < 0)
        throw std::invalid_argument("radial_wavefunction: n must be non-negative");
    detail::require_ascending_grid(rho_grid, /*positive_only=*/true);

    const double g = params.coupling();
    const int abs_l = std::abs(qn.l);
    const double b = abs_l + 1.0;
    const double prefactor = std::pow(g / 2.0, abs_l / 2.0);

    RadialProfile profile;
    profile.grid.assign(rho_grid.begin(), rho_grid.end());
    profile.values.reserve(rho_grid.size());
    double peak = 0.0;
    std::vector<double> integrand;
    integrand.reserve(rho_grid.size());
    for (double rho : rho_grid) {
        const double tau = g * rho * rho / 2.0;
        const double v = prefactor * std::exp(-tau / 2.0) * std::pow(rho, abs_l) *
                         kummer_terminating(qn.n, b, tau);
        profile.values.push_back(v);
        integrand.push_back(v * v * rho);
        peak = std::max(peak, std::abs(v));
    }
    profile.node_count =
        detail::count_sign_changes(profile.values, 1e-12 * peak);

    // |R|^2 rho ~ c rho^{2|l|+1} below the first grid point
    const double head = integrand.front() * rho_grid.front() / (2.0 * abs_l + 2.0);
    const double body = detail::integrate_samples(profile.grid, integrand);
    const double tail = radial_tail_bound(g, qn.n, abs_l, rho_grid.back());
    const double total = head + body + tail;
    profile.norm = total;

    if (normalize) {
        if (!(total > 0.0) || !std::isfinite(total))
            throw std::domain_error("radial_wavefunction: norm integral is not positive");
        if (tail > 1e-10 * total)
            throw std::domain_error(
                "radial_wavefunction: grid too short, Gaussian tail exceeds 1e-10 of the norm");
        const double scale = 1.0 / std::sqrt(total);
        for (double& v : profile.values) v *= scale;
    }
    return profile;
}

std::vector<SpectrumEntry> spectrum_table(const PhysicalParams& params,
                                          int n_max, int l_min, int l_max,
                                          bool include_k) {
    params.validate();
    if (n_max < 0)
        throw std::invalid_argument("spectrum_table: n_max must be non-negative");
    if (l_min > l_max)
        throw std::invalid_argument("spectrum_table: empty l range");
    std::vector<SpectrumEntry> entries;
    entries.reserve(static_cast<std::size_t>(n_max + 1) * (l_max - l_min + 1));
    for (int n = 0; n <= n_max; ++n)
        for (int l = l_min; l <= l_max; ++l) {
            SymmetricQuantumNumbers qn{n, l};
            SpectrumEntry e;
            e.qn = qn;
            e.include_k = include_k;
            e.energy_sq = energy_sq_symmetric(params, qn, include_k);
            e.energy = std::sqrt(e.energy_sq);
            e.nonrel_energy = nonrel_energy_symmetric(params, qn);
            entries.push_back(e);
        }
    std::sort(entries.begin(), entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  if (a.energy_sq != b.energy_sq) return a.energy_sq < b.energy_sq;
                  if (a.qn.n != b.qn.n) return a.qn.n < b.qn.n;
                  return a.qn.l < b.qn.l;
              });
    return entries;
}

std::string spectrum_csv_header() {
    return "n,l,include_k,energy_sq,energy,nonrel_energy";
}

std::string to_csv_row(const SpectrumEntry& entry) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g,%.17g,%.17g", entry.qn.n,
                  entry.qn.l, entry.include_k ? 1 : 0, entry.energy_sq,
                  entry.energy, entry.nonrel_energy);
    return buf;
}

}  // namespace landauac
