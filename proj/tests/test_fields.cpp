#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "landauac/fields.hpp"
#include "landauac/symmetric.hpp"

using namespace landauac;

namespace {
const BoundingBox kUnitBox{{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}};
}

TEST_CASE("symmetric field E = (lambda/2)(x, y, 0)") {
    PhysicalParams p{1.0, 2.0, 1.0, 0.0};
    auto s = electric_field_symmetric(p, {1.0, 1.0, 0.0});
    CHECK(s.e_field[0] == 1.0);
    CHECK(s.e_field[1] == 1.0);
    CHECK(s.e_field[2] == 0.0);

    s = electric_field_symmetric(p, {0.0, 0.0, 7.5});
    CHECK(s.e_field == Vec3{0.0, 0.0, 0.0});

    p.lambda = 1.0;
    s = electric_field_symmetric(p, {3.0, -4.0, 7.0});
    CHECK(s.e_field[0] == 1.5);
    CHECK(s.e_field[1] == -2.0);
    CHECK(s.e_field[2] == 0.0);
}

TEST_CASE("landau field E = lambda (x, 0, 0)") {
    PhysicalParams p{1.0, 1.0, 1.0, 0.0};
    auto s = electric_field_landau(p, {2.0, 5.0, 9.0});
    CHECK(s.e_field == Vec3{2.0, 0.0, 0.0});

    s = electric_field_landau(p, {0.0, 3.0, -1.0});
    CHECK(s.e_field == Vec3{0.0, 0.0, 0.0});

    p.lambda = 0.5;
    s = electric_field_landau(p, {-4.0, 0.0, 0.0});
    CHECK(s.e_field == Vec3{-2.0, 0.0, 0.0});
}

TEST_CASE("effective AC field is (0, 0, mu*lambda) in both gauges") {
    PhysicalParams p{1.0, 1.0, 1.0, 0.0};
    CHECK(effective_ac_field(p, Gauge::Symmetric) == Vec3{0.0, 0.0, 1.0});
    CHECK(effective_ac_field(p, Gauge::Landau) == Vec3{0.0, 0.0, 1.0});

    PhysicalParams q{2.0, 0.5, 1.0, 0.0};
    CHECK(effective_ac_field(q, Gauge::Symmetric) == Vec3{0.0, 0.0, 1.0});

    PhysicalParams zero{0.0, 1.0, 1.0, 0.0};
    CHECK(effective_ac_field(zero, Gauge::Symmetric) == Vec3{0.0, 0.0, 0.0});
}

TEST_CASE("effective field depends only on the product mu*lambda") {
    PhysicalParams a{4.0, 0.25, 1.0, 0.0};
    PhysicalParams b{0.5, 2.0, 1.0, 0.0};
    CHECK(effective_ac_field(a, Gauge::Symmetric) ==
          effective_ac_field(b, Gauge::Landau));
}

TEST_CASE("curl check: both configurations are curl-free") {
    PhysicalParams p{1.0, 1.0, 1.0, 0.0};
    auto sym = [&p](const Vec3& x) { return electric_field_symmetric(p, x); };
    auto lan = [&p](const Vec3& x) { return electric_field_landau(p, x); };

    auto rs = validate_field_conditions(sym, kUnitBox, 1e-3);
    CHECK(rs.max_curl < 1e-8);
    CHECK(rs.samples == 21 * 21 * 21);
    CHECK(rs.static_field);

    auto rl = validate_field_conditions(lan, kUnitBox, 1e-3);
    CHECK(rl.max_curl < 1e-8);
}

TEST_CASE("curl check flags a rotational field") {
    auto rot = [](const Vec3& x) {
        return FieldSample{x, {-x[1], x[0], 0.0}};
    };
    auto r = validate_field_conditions(rot, kUnitBox, 1e-3);
    CHECK(r.max_curl == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("curl check rejects bad arguments") {
    auto f = [](const Vec3& x) { return FieldSample{x, {0.0, 0.0, 0.0}}; };
    CHECK_THROWS_AS(validate_field_conditions(f, kUnitBox, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(validate_field_conditions(f, kUnitBox, -1e-3), std::invalid_argument);
    BoundingBox degenerate{{0.0, 0.0, 0.0}, {0.0, 1.0, 1.0}};
    CHECK_THROWS_AS(validate_field_conditions(f, degenerate, 1e-3),
                    std::invalid_argument);
}

TEST_CASE("condition report serializes to JSON") {
    PhysicalParams p{1.0, 1.0, 1.0, 0.0};
    auto sym = [&p](const Vec3& x) { return electric_field_symmetric(p, x); };
    auto r = validate_field_conditions(sym, kUnitBox, 1e-3);
    const std::string j = r.to_json();
    CHECK(j.find("\"max_curl\"") != std::string::npos);
    CHECK(j.find("\"samples\": 9261") != std::string::npos);
    CHECK(j.find("\"static\": true") != std::string::npos);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(PhysicalParams({1.0, 1.0, -1.0, 0.0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(PhysicalParams({0.0, 1.0, 1.0, 0.0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(PhysicalParams({1.0, -1.0, 1.0, 0.0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        PhysicalParams({1.0, 1.0, 1.0, std::nan("")}).validate(),
        std::invalid_argument);
    CHECK_NOTHROW(PhysicalParams({-1.0, -1.0, 1.0, 0.0}).validate());
}

TEST_CASE("HMW duality: involution on labels, identity on numbers") {
    PhysicalParams p{1.0, 1.0, 1.0, 0.0};
    DualityLabel ac = DualityLabel::aharonov_casher();
    CHECK(ac.consistent());

    auto [p1, hmw] = hmw_dual(p, ac);
    CHECK(hmw.kind == CouplingKind::HeMcKellarWilkens);
    CHECK(hmw.moment_symbol == "d");
    CHECK(hmw.field_symbol == "B");
    CHECK(hmw.consistent());
    CHECK(p1.mu == p.mu);
    CHECK(p1.lambda == p.lambda);

    auto [p2, back] = hmw_dual(p1, hmw);
    CHECK(back.kind == CouplingKind::AharonovCasher);
    CHECK(back.moment_symbol == "μ");

    // spectra under the dual label are numerically unchanged
    CHECK(energy_sq_symmetric(p1, {3, -1}, false) ==
          energy_sq_symmetric(p, {3, -1}, false));
}
