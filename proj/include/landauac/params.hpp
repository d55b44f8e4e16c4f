#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace landauac {

using Vec3 = std::array<double, 3>;

enum class Gauge { Symmetric, Landau };

/// Physical inputs in natural units (hbar = c = 1).
/// The coupling mu*lambda is the single combination that enters every
/// spectrum; mu and lambda are kept separate for interface clarity only.
struct PhysicalParams {
    double mu = 1.0;      // magnetic dipole moment
    double lambda = 1.0;  // linear charge density of the source
    double mass = 1.0;    // rest mass m > 0
    double k = 0.0;       // axial momentum component

    void validate() const {
        if (!(std::isfinite(mu) && std::isfinite(lambda) &&
              std::isfinite(mass) && std::isfinite(k)))
            throw std::invalid_argument("PhysicalParams: all fields must be finite");
        if (!(mass > 0.0))
            throw std::invalid_argument("PhysicalParams: mass must be positive");
        if (!(mu * lambda > 0.0))
            throw std::invalid_argument(
                "PhysicalParams: mu*lambda must be positive for a bound spectrum");
    }

    /// Effective coupling mu*lambda. Evaluated once so every downstream
    /// formula sees the identical rounded product.
    double coupling() const { return mu * lambda; }
};

enum class CouplingKind { AharonovCasher, HeMcKellarWilkens };

/// Which dipole/field pairing the numbers are read as. The Aharonov-Casher
/// problem (magnetic dipole in an electric field) and its He-McKellar-Wilkens
/// dual (electric dipole in a magnetic field) share one set of equations.
struct DualityLabel {
    CouplingKind kind = CouplingKind::AharonovCasher;
    std::string moment_symbol = "μ";  // "μ" or "d"
    std::string field_symbol = "E";        // "E" or "B"

    static DualityLabel aharonov_casher() {
        return {CouplingKind::AharonovCasher, "μ", "E"};
    }
    static DualityLabel he_mckellar_wilkens() {
        return {CouplingKind::HeMcKellarWilkens, "d", "B"};
    }

    bool consistent() const {
        if (kind == CouplingKind::AharonovCasher)
            return moment_symbol == "μ" && field_symbol == "E";
        return moment_symbol == "d" && field_symbol == "B";
    }
};

/// Duality relabeling mu -> d, E -> B. Identity on the numbers, involution
/// on the label; spectra computed under the dual label are unchanged.
inline std::pair<PhysicalParams, DualityLabel>
hmw_dual(const PhysicalParams& params, const DualityLabel& label) {
    DualityLabel dual = (label.kind == CouplingKind::AharonovCasher)
                            ? DualityLabel::he_mckellar_wilkens()
                            : DualityLabel::aharonov_casher();
    return {params, dual};
}

}  // namespace landauac
