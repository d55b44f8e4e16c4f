#pragma once

#include <functional>
#include <string>

#include "landauac/params.hpp"

namespace landauac {

struct FieldSample {
    Vec3 point{};
    Vec3 e_field{};
};

using FieldFn = std::function<FieldSample(const Vec3&)>;

/// Radial field of two coaxial charged shells, E = (lambda/2)(x, y, 0).
FieldSample electric_field_symmetric(const PhysicalParams& params, const Vec3& point);

/// Field of a uniformly charged plane, E = lambda (x, 0, 0).
FieldSample electric_field_landau(const PhysicalParams& params, const Vec3& point);

/// Effective uniform field (0, 0, mu*lambda) seen by the dipole; the same
/// in both gauges.
Vec3 effective_ac_field(const PhysicalParams& params, Gauge gauge);

struct BoundingBox {
    Vec3 lo{};
    Vec3 hi{};
};

struct ConditionReport {
    double max_curl = 0.0;   // max |component of curl E| over the lattice
    long samples = 0;        // lattice points evaluated
    double step = 0.0;       // central-difference step
    bool static_field = true;  // fields carry no time argument

    std::string to_json() const;
};

/// Checks the Landau-quantization field conditions (static, curl-free) by
/// evaluating a central-difference curl on a lattice of interior points.
ConditionReport validate_field_conditions(const FieldFn& field,
                                          const BoundingBox& region,
                                          double step,
                                          int samples_per_axis = 21);

}  // namespace landauac
