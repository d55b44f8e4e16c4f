#pragma once

#include <span>
#include <string>
#include <vector>

#include "landauac/params.hpp"
#include "landauac/quadrature.hpp"

namespace landauac {

struct SymmetricQuantumNumbers {
    int n = 0;  // radial index, n >= 0
    int l = 0;  // angular momentum of the e^{il phi} factor
};

struct SpectrumEntry {
    SymmetricQuantumNumbers qn;
    double energy_sq = 0.0;
    double energy = 0.0;        // positive branch
    double nonrel_energy = 0.0;
    bool include_k = false;
};

/// E^2 = m^2 + [k^2] + 2 mu lambda (n + |l|/2 + l/2 + 1). The level shift
/// n + (|l|+l)/2 + 1 is integer, so degenerate levels agree bit for bit.
double energy_sq_symmetric(const PhysicalParams& params,
                           const SymmetricQuantumNumbers& qn, bool include_k);

/// Positive-branch energy; the Dirac equation also admits -sqrt(E^2),
/// exposed through `antiparticle`.
double energy_symmetric(const PhysicalParams& params,
                        const SymmetricQuantumNumbers& qn, bool include_k,
                        bool antiparticle = false);

/// beta = (E^2 - m^2 - k^2)/(2 mu lambda) - l/2 - 1/2; quantization closes
/// as beta - |l|/2 - 1/2 = n.
double beta_parameter(const PhysicalParams& params, double energy_sq, int l);

/// Non-relativistic limit m + (mu lambda / m)(n + |l|/2 + l/2 + 1).
double nonrel_energy_symmetric(const PhysicalParams& params,
                               const SymmetricQuantumNumbers& qn);

/// Radial eigenfunction
///   R(rho) = (g/2)^{|l|/2} e^{-g rho^2/4} rho^{|l|} 1F1(-n; |l|+1; g rho^2/2)
/// sampled on a strictly ascending positive grid. When normalizing, the
/// squared norm is the grid quadrature plus closed-form head/tail estimates;
/// the Gaussian tail beyond the grid must stay below 1e-10 of the total.
RadialProfile radial_wavefunction(const PhysicalParams& params,
                                  const SymmetricQuantumNumbers& qn,
                                  std::span<const double> rho_grid,
                                  bool normalize);

std::vector<SpectrumEntry> spectrum_table(const PhysicalParams& params,
                                          int n_max, int l_min, int l_max,
                                          bool include_k);

std::string spectrum_csv_header();
std::string to_csv_row(const SpectrumEntry& entry);

}  // namespace landauac
