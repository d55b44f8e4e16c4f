#include "landauac/fields.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace landauac {

FieldSample electric_field_symmetric(const PhysicalParams& params, const Vec3& point) {
    const double half = params.lambda / 2.0;
    return {point, {half * point[0], half * point[1], 0.0}};
}

FieldSample electric_field_landau(const PhysicalParams& params, const Vec3& point) {
    return {point, {params.lambda * point[0], 0.0, 0.0}};
}

Vec3 effective_ac_field(const PhysicalParams& params, Gauge /*gauge*/) {
    // Uniform in both gauges; for the Landau gauge this is the curl of the
    // effective potential A_x = lambda*x.
    return {0.0, 0.0, params.coupling()};
}

std::string ConditionReport::to_json() const {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "{\"max_curl\": %.17g, \"samples\": %ld, \"step\": %.17g, \"static\": %s}",
                  max_curl, samples, step, static_field ? "true" : "false");
    return buf;
}

ConditionReport validate_field_conditions(const FieldFn& field,
                                          const BoundingBox& region,
                                          double step,
                                          int samples_per_axis) {
    if (!(step > 0.0))
        throw std::invalid_argument("validate_field_conditions: step must be positive");
    if (samples_per_axis < 2)
        throw std::invalid_argument("validate_field_conditions: need at least 2 samples per axis");
    for (int a = 0; a < 3; ++a)
        if (!(region.lo[a] < region.hi[a]))
            throw std::invalid_argument("validate_field_conditions: degenerate region");

    auto component = [&](const Vec3& p, int c) { return field(p).e_field[c]; };
    // dE_c/dx_a by central difference
    auto deriv = [&](Vec3 p, int c, int a) {
        Vec3 pp = p, pm = p;
        pp[a] += step;
        pm[a] -= step;
        return (component(pp, c) - component(pm, c)) / (2.0 * step);
    };

    ConditionReport report;
    report.step = step;
    const int n = samples_per_axis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk) {
                Vec3 p;
                const int idx[3] = {i, j, kk};
                for (int a = 0; a < 3; ++a)
                    p[a] = region.lo[a] +
                           (region.hi[a] - region.lo[a]) * (idx[a] + 1) / (n + 1);
                const double cx = deriv(p, 2, 1) - deriv(p, 1, 2);
                const double cy = deriv(p, 0, 2) - deriv(p, 2, 0);
                const double cz = deriv(p, 1, 0) - deriv(p, 0, 1);
                report.max_curl = std::max(
                    {report.max_curl, std::abs(cx), std::abs(cy), std::abs(cz)});
                ++report.samples;
            }
    return report;
}

}  // namespace landauac
