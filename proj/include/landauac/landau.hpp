#pragma once

#include <span>
#include <string>
#include <vector>

#include "landauac/params.hpp"
#include "landauac/quadrature.hpp"

namespace landauac {

struct LandauQuantumNumbers {
    int n = 0;        // oscillator index, n >= 0
    double p_y = 0.0; // transverse momentum of the e^{i p_y y} factor
};

/// Shifted oscillator well: center x0 = -p_y / (mu lambda), Gaussian
/// length scale 1/sqrt(mu lambda).
struct OscillatorGeometry {
    double center = 0.0;
    double width = 1.0;
};

struct LandauSpectrumEntry {
    LandauQuantumNumbers qn;
    double energy_sq = 0.0;
    double energy = 0.0;
    double nonrel_energy = 0.0;
    bool include_k = false;
};

/// E^2 = m^2 + [k^2] + 2 mu lambda (n + 1/2) + mu lambda, independent of
/// p_y. Evaluated as m^2 + [k^2] + 2 mu lambda (n + 1) so it matches the
/// symmetric-gauge value at l = 0 bit for bit.
double energy_sq_landau(const PhysicalParams& params,
                        const LandauQuantumNumbers& qn, bool include_k);

double energy_landau(const PhysicalParams& params,
                     const LandauQuantumNumbers& qn, bool include_k,
                     bool antiparticle = false);

OscillatorGeometry oscillator_center(const PhysicalParams& params, double p_y);

/// Non-relativistic limit m + (mu lambda / m)(n + 1/2) + mu lambda / (2m).
double nonrel_energy_landau(const PhysicalParams& params,
                            const LandauQuantumNumbers& qn);

/// psi_n(x) = H_n(sqrt(g)(x - x0)) exp(-g (x - x0)^2 / 2), g = mu lambda.
/// Normalized to unit integral of |psi|^2 dx when requested; the Gaussian
/// tails beyond the grid must stay below 1e-10 of the norm.
RadialProfile eigenfunction_landau(const PhysicalParams& params,
                                   const LandauQuantumNumbers& qn,
                                   std::span<const double> x_grid,
                                   bool normalize);

std::vector<LandauSpectrumEntry> spectrum_table_landau(
    const PhysicalParams& params, int n_max, double p_y, bool include_k);

std::string landau_csv_header();
std::string to_csv_row(const LandauSpectrumEntry& entry);

}  // namespace landauac
