// landauac: spectra, eigenfunctions, and finite-difference verification for
// the relativistic Landau-Aharonov-Casher problem of a neutral magnetic
// dipole in an external electric field.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "landauac/fields.hpp"
#include "landauac/landau.hpp"
#include "landauac/oracle.hpp"
#include "landauac/params.hpp"
#include "landauac/symmetric.hpp"

using nlohmann::json;
using namespace landauac;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Verification tolerances (fixed; see the oracle contract).
constexpr double kRawTolerance = 1e-3;
constexpr double kRichardsonTolerance = 1e-4;
constexpr double kCurlTolerance = 1e-8;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct RunConfig {
    std::string gauge = "symmetric";
    double mu = 1.0, lambda = 1.0, mass = 1.0, k = 0.0;
    int n_max = 0;
    int l_min = 0, l_max = 0;
    double p_y = 0.0;
    bool include_k = false;
    std::string format = "csv";
    std::string output = "-";
    int grid_points = 4000;
    std::optional<double> domain_min, domain_max;

    PhysicalParams params() const { return {mu, lambda, mass, k}; }
    bool landau() const { return gauge == "landau"; }
};

int write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitIo;
    }
    out << content;
    if (!out) {
        std::cerr << "error: failed writing output file '" << path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

// Default solver domains: wide enough that the ground-state Gaussian
// envelope at the walls is far below the 1e-12 acceptance ceiling.
double default_radial_rmax(double g) {
    return std::sqrt(4.0 * std::log(1e14) / g) * 1.15;
}
double default_cartesian_halfspan(double g) {
    return std::sqrt(2.0 * std::log(1e14) / g) * 1.3;
}

int run_spectrum(const RunConfig& cfg) {
    const PhysicalParams params = cfg.params();
    std::ostringstream out;
    if (cfg.landau()) {
        auto entries = spectrum_table_landau(params, cfg.n_max, cfg.p_y, cfg.include_k);
        if (cfg.format == "csv") {
            out << landau_csv_header() << "\n";
            for (const auto& e : entries) out << to_csv_row(e) << "\n";
        } else {
            json j;
            j["gauge"] = "landau";
            j["entries"] = json::array();
            for (const auto& e : entries)
                j["entries"].push_back({{"n", e.qn.n},
                                        {"p_y", e.qn.p_y},
                                        {"include_k", e.include_k},
                                        {"energy_sq", e.energy_sq},
                                        {"energy", e.energy},
                                        {"nonrel_energy", e.nonrel_energy}});
            out << j.dump(2) << "\n";
        }
    } else {
        auto entries =
            spectrum_table(params, cfg.n_max, cfg.l_min, cfg.l_max, cfg.include_k);
        if (cfg.format == "csv") {
            out << spectrum_csv_header() << "\n";
            for (const auto& e : entries) out << to_csv_row(e) << "\n";
        } else {
            json j;
            j["gauge"] = "symmetric";
            j["entries"] = json::array();
            for (const auto& e : entries)
                j["entries"].push_back({{"n", e.qn.n},
                                        {"l", e.qn.l},
                                        {"include_k", e.include_k},
                                        {"energy_sq", e.energy_sq},
                                        {"energy", e.energy},
                                        {"nonrel_energy", e.nonrel_energy}});
            out << j.dump(2) << "\n";
        }
    }
    return write_output(cfg.output, out.str());
}

int run_wavefunction(const RunConfig& cfg, int n, int l) {
    const PhysicalParams params = cfg.params();
    const double g = params.coupling();
    std::vector<double> grid(cfg.grid_points);
    RadialProfile profile;
    if (cfg.landau()) {
        const OscillatorGeometry geom = oscillator_center(params, cfg.p_y);
        const double half = cfg.domain_max ? *cfg.domain_max - geom.center
                                           : default_cartesian_halfspan(g);
        const double lo = cfg.domain_min.value_or(geom.center - half);
        const double hi = cfg.domain_max.value_or(geom.center + half);
        for (int i = 0; i < cfg.grid_points; ++i)
            grid[i] = lo + (hi - lo) * i / (cfg.grid_points - 1);
        profile = eigenfunction_landau(params, {n, cfg.p_y}, grid, true);
    } else {
        const double lo = cfg.domain_min.value_or(1e-6);
        const double hi = cfg.domain_max.value_or(default_radial_rmax(g));
        for (int i = 0; i < cfg.grid_points; ++i)
            grid[i] = lo + (hi - lo) * i / (cfg.grid_points - 1);
        profile = radial_wavefunction(params, {n, l}, grid, true);
    }
    std::ostringstream out;
    out << "# node_count=" << profile.node_count << "\n";
    out << "coordinate,value\n";
    for (std::size_t i = 0; i < profile.grid.size(); ++i)
        out << fmt17(profile.grid[i]) << "," << fmt17(profile.values[i]) << "\n";
    return write_output(cfg.output, out.str());
}

json oracle_entry_json(const OracleResult& refined, double raw_disc,
                       double refined_disc) {
    json j = json::parse(refined.to_json());
    j["raw_rel_discrepancy"] = raw_disc;
    j["richardson_rel_discrepancy"] = refined_disc;
    return j;
}

int run_verify(const RunConfig& cfg) {
    const PhysicalParams params = cfg.params();
    const double g = params.coupling();
    const int m_levels = cfg.n_max + 1;

    json report;
    bool pass = true;
    double worst = 0.0;

    auto check = [&](OracleResult coarse, OracleResult fine,
                     const std::vector<double>& refs) {
        OracleResult refined = richardson_refine(coarse, fine);
        OracleResult raw = fine;
        set_reference_discrepancy(raw, refs);
        set_reference_discrepancy(refined, refs);
        worst = std::max(worst, raw.max_rel_discrepancy);
        if (raw.max_rel_discrepancy > kRawTolerance ||
            refined.max_rel_discrepancy > kRichardsonTolerance)
            pass = false;
        return oracle_entry_json(refined, raw.max_rel_discrepancy,
                                 refined.max_rel_discrepancy);
    };

    report["oracle"] = json::array();
    if (cfg.landau()) {
        const double x0 = oscillator_center(params, cfg.p_y).center;
        const double half = default_cartesian_halfspan(g);
        GridSpec coarse{cfg.grid_points, cfg.domain_min.value_or(x0 - half),
                        cfg.domain_max.value_or(x0 + half)};
        GridSpec fine{2 * cfg.grid_points, coarse.x_min, coarse.x_max};
        std::vector<double> refs(m_levels);
        for (int n = 0; n <= cfg.n_max; ++n)
            refs[n] = energy_sq_landau(params, {n, cfg.p_y}, cfg.include_k) -
                      params.mass * params.mass -
                      (cfg.include_k ? params.k * params.k : 0.0) - g;
        json entry = check(cartesian_fd_spectrum(params, cfg.p_y, coarse, m_levels),
                           cartesian_fd_spectrum(params, cfg.p_y, fine, m_levels),
                           refs);
        entry["p_y"] = cfg.p_y;
        report["oracle"].push_back(entry);
    } else {
        GridSpec coarse{cfg.grid_points, 0.0,
                        cfg.domain_max.value_or(default_radial_rmax(g))};
        GridSpec fine{2 * cfg.grid_points, coarse.x_min, coarse.x_max};
        for (int l = cfg.l_min; l <= cfg.l_max; ++l) {
            std::vector<double> refs(m_levels);
            for (int n = 0; n <= cfg.n_max; ++n)
                refs[n] = energy_sq_symmetric(params, {n, l}, cfg.include_k) -
                          params.mass * params.mass -
                          (cfg.include_k ? params.k * params.k : 0.0);
            json entry = check(radial_fd_spectrum(params, l, coarse, m_levels),
                               radial_fd_spectrum(params, l, fine, m_levels), refs);
            entry["l"] = l;
            report["oracle"].push_back(entry);
        }
    }
    report["max_rel_discrepancy"] = worst;

    // field conditions, both configurations
    const BoundingBox box{{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}};
    auto sym_field = [&params](const Vec3& p) {
        return electric_field_symmetric(params, p);
    };
    auto lan_field = [&params](const Vec3& p) {
        return electric_field_landau(params, p);
    };
    const ConditionReport curl_sym = validate_field_conditions(sym_field, box, 1e-3);
    const ConditionReport curl_lan = validate_field_conditions(lan_field, box, 1e-3);
    if (curl_sym.max_curl >= kCurlTolerance || curl_lan.max_curl >= kCurlTolerance)
        pass = false;
    report["curl"] = {{"symmetric", json::parse(curl_sym.to_json())},
                      {"landau", json::parse(curl_lan.to_json())}};

    report["tolerances"] = {{"raw", kRawTolerance},
                            {"richardson", kRichardsonTolerance},
                            {"curl", kCurlTolerance}};
    report["pass"] = pass;

    const int io = write_output(cfg.output, report.dump(2) + "\n");
    if (io != kExitOk) return io;
    return pass ? kExitOk : kExitVerifyFailure;
}

int run_sweep(const RunConfig& cfg, const std::string& param, double start,
              double stop, int steps) {
    std::ostringstream out;
    out << (cfg.landau() ? "param,value,n,p_y,energy,nonrel_energy,gap"
                         : "param,value,n,l,energy,nonrel_energy,gap")
        << "\n";
    for (int i = 0; i < steps; ++i) {
        const double value = start + (stop - start) * i / (steps - 1);
        RunConfig point = cfg;
        if (param == "lambda")
            point.lambda = value;
        else if (param == "mu")
            point.mu = value;
        else if (param == "mass")
            point.mass = value;
        else
            point.k = value;
        const PhysicalParams params = point.params();
        params.validate();
        if (cfg.landau()) {
            for (const auto& e :
                 spectrum_table_landau(params, cfg.n_max, cfg.p_y, cfg.include_k))
                out << param << "," << fmt17(value) << "," << e.qn.n << ","
                    << fmt17(e.qn.p_y) << "," << fmt17(e.energy) << ","
                    << fmt17(e.nonrel_energy) << ","
                    << fmt17(e.energy - e.nonrel_energy) << "\n";
        } else {
            for (const auto& e : spectrum_table(params, cfg.n_max, cfg.l_min,
                                                cfg.l_max, cfg.include_k))
                out << param << "," << fmt17(value) << "," << e.qn.n << ","
                    << e.qn.l << "," << fmt17(e.energy) << ","
                    << fmt17(e.nonrel_energy) << ","
                    << fmt17(e.energy - e.nonrel_energy) << "\n";
        }
    }
    return write_output(cfg.output, out.str());
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--gauge", cfg.gauge, "field configuration")
        ->check(CLI::IsMember({"symmetric", "landau"}));
    cmd->add_option("--mu", cfg.mu, "magnetic dipole moment");
    cmd->add_option("--lambda", cfg.lambda, "linear charge density");
    cmd->add_option("--mass", cfg.mass, "rest mass");
    cmd->add_option("--k", cfg.k, "axial momentum");
    cmd->add_flag("--include-k", cfg.include_k,
                  "keep the k^2 term (no torque-free condition)");
    cmd->add_option("--output", cfg.output, "output path ('-' for stdout)");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->set_config("--config", "", "key=value config file (flags override)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Relativistic Landau levels of a neutral magnetic dipole in an "
        "external electric field (Aharonov-Casher coupling)"};
    app.require_subcommand(1);

    RunConfig cfg;
    int wf_n = 0, wf_l = 0;
    std::string sweep_param;
    double sweep_start = 0.0, sweep_stop = 0.0;
    int sweep_steps = 2;

    CLI::App* spectrum = app.add_subcommand("spectrum", "tabulate energy levels");
    add_common_options(spectrum, cfg);
    spectrum->add_option("--n-max", cfg.n_max, "highest level index");
    CLI::Option* sp_lmin = spectrum->add_option("--l-min", cfg.l_min);
    CLI::Option* sp_lmax = spectrum->add_option("--l-max", cfg.l_max);
    CLI::Option* sp_py = spectrum->add_option("--p-y", cfg.p_y);

    CLI::App* wavefunction =
        app.add_subcommand("wavefunction", "sample a normalized eigenfunction");
    add_common_options(wavefunction, cfg);
    wavefunction->add_option("--n", wf_n, "level index");
    CLI::Option* wf_lopt = wavefunction->add_option("--l", wf_l);
    CLI::Option* wf_py = wavefunction->add_option("--p-y", cfg.p_y);
    wavefunction->add_option("--grid-points", cfg.grid_points)
        ->check(CLI::PositiveNumber);
    wavefunction->add_option("--domain-min", cfg.domain_min);
    wavefunction->add_option("--domain-max", cfg.domain_max);

    CLI::App* verify = app.add_subcommand(
        "verify", "finite-difference oracle and field-condition checks");
    add_common_options(verify, cfg);
    verify->add_option("--n-max", cfg.n_max, "highest level to verify");
    CLI::Option* vf_lmin = verify->add_option("--l-min", cfg.l_min);
    CLI::Option* vf_lmax = verify->add_option("--l-max", cfg.l_max);
    CLI::Option* vf_py = verify->add_option("--p-y", cfg.p_y);
    verify->add_option("--grid-points", cfg.grid_points);
    verify->add_option("--domain-min", cfg.domain_min);
    verify->add_option("--domain-max", cfg.domain_max);

    CLI::App* sweep =
        app.add_subcommand("sweep", "parameter sweep with exact vs Taylor gap");
    add_common_options(sweep, cfg);
    sweep->add_option("--n-max", cfg.n_max);
    CLI::Option* sw_lmin = sweep->add_option("--l-min", cfg.l_min);
    CLI::Option* sw_lmax = sweep->add_option("--l-max", cfg.l_max);
    CLI::Option* sw_py = sweep->add_option("--p-y", cfg.p_y);
    sweep->add_option("--param", sweep_param, "parameter to sweep")
        ->required()
        ->check(CLI::IsMember({"lambda", "mu", "mass", "k"}));
    sweep->add_option("--start", sweep_start)->required();
    sweep->add_option("--stop", sweep_stop)->required();
    sweep->add_option("--steps", sweep_steps)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        cfg.params().validate();

        // gauge/flag consistency
        const bool landau = cfg.landau();
        auto used = [](const CLI::Option* o) { return o && o->count() > 0; };
        if (landau && (used(sp_lmin) || used(sp_lmax) || used(vf_lmin) ||
                       used(vf_lmax) || used(sw_lmin) || used(sw_lmax) ||
                       used(wf_lopt))) {
            std::cerr << "error: l-range options apply to the symmetric gauge only\n";
            return kExitUsage;
        }
        if (!landau && (used(sp_py) || used(vf_py) || used(sw_py) || used(wf_py))) {
            std::cerr << "error: --p-y applies to the landau gauge only\n";
            return kExitUsage;
        }

        if (spectrum->parsed()) return run_spectrum(cfg);
        if (wavefunction->parsed()) return run_wavefunction(cfg, wf_n, wf_l);
        if (verify->parsed()) return run_verify(cfg);
        if (sweep->parsed()) {
            if (sweep_steps < 2) {
                std::cerr << "error: --steps must be at least 2\n";
                return kExitUsage;
            }
            return run_sweep(cfg, sweep_param, sweep_start, sweep_stop, sweep_steps);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
