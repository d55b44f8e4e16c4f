#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "landauac/fields.hpp"
#include "landauac/landau.hpp"
#include "landauac/oracle.hpp"
#include "landauac/params.hpp"
#include "landauac/special.hpp"
#include "landauac/symmetric.hpp"

namespace py = pybind11;
using namespace landauac;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Relativistic Landau-Aharonov-Casher spectra for a neutral "
              "magnetic dipole in an external electric field";

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def(py::init([](double mu, double lam, double mass, double k) {
                 PhysicalParams p{mu, lam, mass, k};
                 p.validate();
                 return p;
             }),
             py::arg("mu") = 1.0, py::arg("lam") = 1.0, py::arg("mass") = 1.0,
             py::arg("k") = 0.0)
        .def_readwrite("mu", &PhysicalParams::mu)
        .def_readwrite("lam", &PhysicalParams::lambda)
        .def_readwrite("mass", &PhysicalParams::mass)
        .def_readwrite("k", &PhysicalParams::k)
        .def("coupling", &PhysicalParams::coupling)
        .def("validate", &PhysicalParams::validate);

    py::enum_<Gauge>(m, "Gauge")
        .value("Symmetric", Gauge::Symmetric)
        .value("Landau", Gauge::Landau);

    py::enum_<CouplingKind>(m, "CouplingKind")
        .value("AharonovCasher", CouplingKind::AharonovCasher)
        .value("HeMcKellarWilkens", CouplingKind::HeMcKellarWilkens);

    py::class_<DualityLabel>(m, "DualityLabel")
        .def_static("aharonov_casher", &DualityLabel::aharonov_casher)
        .def_static("he_mckellar_wilkens", &DualityLabel::he_mckellar_wilkens)
        .def_readonly("kind", &DualityLabel::kind)
        .def_readonly("moment_symbol", &DualityLabel::moment_symbol)
        .def_readonly("field_symbol", &DualityLabel::field_symbol)
        .def("consistent", &DualityLabel::consistent);

    m.def("hmw_dual", &hmw_dual, py::arg("params"), py::arg("label"));

    py::class_<FieldSample>(m, "FieldSample")
        .def(py::init([](Vec3 point, Vec3 e_field) {
                 return FieldSample{point, e_field};
             }),
             py::arg("point"), py::arg("e_field"))
        .def_readonly("point", &FieldSample::point)
        .def_readonly("e_field", &FieldSample::e_field);

    m.def("electric_field_symmetric", &electric_field_symmetric);
    m.def("electric_field_landau", &electric_field_landau);
    m.def("effective_ac_field", &effective_ac_field);

    py::class_<ConditionReport>(m, "ConditionReport")
        .def_readonly("max_curl", &ConditionReport::max_curl)
        .def_readonly("samples", &ConditionReport::samples)
        .def_readonly("step", &ConditionReport::step)
        .def_readonly("static_field", &ConditionReport::static_field)
        .def("to_json", &ConditionReport::to_json);

    py::class_<BoundingBox>(m, "BoundingBox")
        .def(py::init([](Vec3 lo, Vec3 hi) { return BoundingBox{lo, hi}; }))
        .def_readwrite("lo", &BoundingBox::lo)
        .def_readwrite("hi", &BoundingBox::hi);

    m.def(
        "validate_field_conditions",
        [](const std::function<FieldSample(Vec3)>& field, const BoundingBox& box,
           double step, int samples_per_axis) {
            return validate_field_conditions(
                [&field](const Vec3& p) { return field(p); }, box, step,
                samples_per_axis);
        },
        py::arg("field"), py::arg("region"), py::arg("step"),
        py::arg("samples_per_axis") = 21);

    m.def("kummer_terminating", &kummer_terminating, py::arg("n"), py::arg("b"),
          py::arg("tau"));
    m.def("hermite", &hermite, py::arg("n"), py::arg("x"));
    m.def("laguerre_general", &laguerre_general, py::arg("n"), py::arg("alpha"),
          py::arg("x"));

    py::class_<SymmetricQuantumNumbers>(m, "SymmetricQuantumNumbers")
        .def(py::init([](int n, int l) { return SymmetricQuantumNumbers{n, l}; }),
             py::arg("n"), py::arg("l"))
        .def_readwrite("n", &SymmetricQuantumNumbers::n)
        .def_readwrite("l", &SymmetricQuantumNumbers::l);

    py::class_<RadialProfile>(m, "Profile")
        .def_readonly("grid", &RadialProfile::grid)
        .def_readonly("values", &RadialProfile::values)
        .def_readonly("norm", &RadialProfile::norm)
        .def_readonly("node_count", &RadialProfile::node_count);

    m.def("energy_sq_symmetric", &energy_sq_symmetric, py::arg("params"),
          py::arg("qn"), py::arg("include_k") = false);
    m.def("energy_symmetric", &energy_symmetric, py::arg("params"), py::arg("qn"),
          py::arg("include_k") = false, py::arg("antiparticle") = false);
    m.def("beta_parameter", &beta_parameter, py::arg("params"),
          py::arg("energy_sq"), py::arg("l"));
    m.def("nonrel_energy_symmetric", &nonrel_energy_symmetric);
    m.def(
        "radial_wavefunction",
        [](const PhysicalParams& p, const SymmetricQuantumNumbers& qn,
           const std::vector<double>& grid, bool normalize) {
            return radial_wavefunction(p, qn, grid, normalize);
        },
        py::arg("params"), py::arg("qn"), py::arg("rho_grid"),
        py::arg("normalize") = true);

    py::class_<SpectrumEntry>(m, "SpectrumEntry")
        .def_readonly("qn", &SpectrumEntry::qn)
        .def_readonly("energy_sq", &SpectrumEntry::energy_sq)
        .def_readonly("energy", &SpectrumEntry::energy)
        .def_readonly("nonrel_energy", &SpectrumEntry::nonrel_energy)
        .def_readonly("include_k", &SpectrumEntry::include_k);

    m.def("spectrum_table", &spectrum_table, py::arg("params"), py::arg("n_max"),
          py::arg("l_min"), py::arg("l_max"), py::arg("include_k") = false);

    py::class_<LandauQuantumNumbers>(m, "LandauQuantumNumbers")
        .def(py::init([](int n, double p_y) { return LandauQuantumNumbers{n, p_y}; }),
             py::arg("n"), py::arg("p_y") = 0.0)
        .def_readwrite("n", &LandauQuantumNumbers::n)
        .def_readwrite("p_y", &LandauQuantumNumbers::p_y);

    py::class_<OscillatorGeometry>(m, "OscillatorGeometry")
        .def_readonly("center", &OscillatorGeometry::center)
        .def_readonly("width", &OscillatorGeometry::width);

    m.def("energy_sq_landau", &energy_sq_landau, py::arg("params"), py::arg("qn"),
          py::arg("include_k") = false);
    m.def("energy_landau", &energy_landau, py::arg("params"), py::arg("qn"),
          py::arg("include_k") = false, py::arg("antiparticle") = false);
    m.def("oscillator_center", &oscillator_center);
    m.def("nonrel_energy_landau", &nonrel_energy_landau);
    m.def(
        "eigenfunction_landau",
        [](const PhysicalParams& p, const LandauQuantumNumbers& qn,
           const std::vector<double>& grid, bool normalize) {
            return eigenfunction_landau(p, qn, grid, normalize);
        },
        py::arg("params"), py::arg("qn"), py::arg("x_grid"),
        py::arg("normalize") = true);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](int n_points, double x_min, double x_max) {
                 GridSpec g{n_points, x_min, x_max};
                 g.validate();
                 return g;
             }),
             py::arg("n_points"), py::arg("x_min"), py::arg("x_max"))
        .def_readwrite("n_points", &GridSpec::n_points)
        .def_readwrite("x_min", &GridSpec::x_min)
        .def_readwrite("x_max", &GridSpec::x_max)
        .def("spacing", &GridSpec::spacing);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("eigenvalues", &OracleResult::eigenvalues)
        .def_readonly("grid", &OracleResult::grid)
        .def_readonly("richardson_estimate", &OracleResult::richardson_estimate)
        .def_readonly("max_rel_discrepancy", &OracleResult::max_rel_discrepancy)
        .def("to_json", &OracleResult::to_json);

    m.def("radial_fd_spectrum", &radial_fd_spectrum, py::arg("params"),
          py::arg("l"), py::arg("grid"), py::arg("m_levels") = 5);
    m.def("cartesian_fd_spectrum", &cartesian_fd_spectrum, py::arg("params"),
          py::arg("p_y"), py::arg("grid"), py::arg("m_levels") = 5);
    m.def("richardson_refine", &richardson_refine);
    m.def(
        "set_reference_discrepancy",
        [](OracleResult& r, const std::vector<double>& refs) {
            set_reference_discrepancy(r, refs);
            return r.max_rel_discrepancy;
        },
        py::arg("result"), py::arg("references"));
}
