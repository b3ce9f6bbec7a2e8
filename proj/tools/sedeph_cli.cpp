// sedeph_cli.cpp - Command-line front end for sweeps, curves, and demos
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sedeph/bath.hpp"
#include "sedeph/dilation.hpp"
#include "sedeph/dynamics.hpp"
#include "sedeph/errors.hpp"
#include "sedeph/fock_oracle.hpp"
#include "sedeph/io.hpp"
#include "sedeph/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct StateOptions {
    double werner_c{0.2};
    std::string state_path;
};

void add_state_options(CLI::App* cmd, StateOptions& opt) {
    auto* c = cmd->add_option("--werner-c", opt.werner_c, "Werner purity parameter c in [0, 1]");
    auto* s = cmd->add_option("--state", opt.state_path, "Path to an X-state JSON document");
    c->excludes(s);
}

sedeph::XState load_state(const StateOptions& opt) {
    if (opt.state_path.empty()) return sedeph::WernerParams{opt.werner_c}.to_x_state();
    std::ifstream in(opt.state_path);
    if (!in) throw sedeph::InputError("cannot open state file " + opt.state_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw sedeph::InputError(std::string("invalid JSON in state file: ") + e.what());
    }
    return sedeph::io::xstate_from_json(j);
}

void add_grid_options(CLI::App* cmd, sedeph::SweepConfig& cfg, bool with_tau) {
    cmd->add_option("--kappa", cfg.kappa, "Coupling strength kappa");
    cmd->add_option("--theta-min", cfg.theta_min, "Lowest temperature k_B T/(hbar omega_c)");
    cmd->add_option("--theta-max", cfg.theta_max, "Highest temperature");
    cmd->add_option("--theta-steps", cfg.theta_steps, "Temperature grid points");
    if (with_tau) {
        cmd->add_option("--tau-min", cfg.tau_min, "Earliest time omega_c t");
        cmd->add_option("--tau-max", cfg.tau_max, "Latest time");
        cmd->add_option("--tau-steps", cfg.tau_steps, "Time grid points");
    }
    cmd->add_option("--out", cfg.out_prefix, "Output path prefix");
    cmd->add_option("--threads", cfg.threads, "Worker threads");
}

void write_file(const std::string& path, const auto& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sedeph::InputError("cannot write " + path);
    writer(out);
}

void finish_config(sedeph::SweepConfig& cfg, const StateOptions& st) {
    cfg.state = load_state(st);
    if (st.state_path.empty()) cfg.werner_c = st.werner_c; else cfg.werner_c.reset();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"System-environment entanglement diagnostics for a dephasing two-qubit X state"};
    app.require_subcommand(1);

    // phase-diagram
    sedeph::SweepConfig phase_cfg;
    StateOptions phase_state;
    bool phase_overlays = false;
    auto* phase = app.add_subcommand("phase-diagram", "Classify a (theta, tau) grid; write CSV, metadata, plot script");
    add_state_options(phase, phase_state);
    add_grid_options(phase, phase_cfg, true);
    phase->add_flag("--overlays", phase_overlays, "Also write decoherence and sudden-death curves");

    // curves
    sedeph::SweepConfig curve_cfg;
    StateOptions curve_state;
    auto* curves = app.add_subcommand("curves", "Decoherence time and sudden-death time versus theta");
    add_state_options(curves, curve_state);
    add_grid_options(curves, curve_cfg, false);

    // tcrit
    double tcrit_kappa = 1e-3;
    double tcrit_c = 0.2;
    auto* tcrit = app.add_subcommand("tcrit", "Critical temperature for a Werner state");
    tcrit->add_option("--kappa", tcrit_kappa, "Coupling strength kappa");
    tcrit->add_option("--werner-c", tcrit_c, "Werner purity parameter c in (0, 1]");

    // concurrence
    StateOptions conc_state;
    double conc_kappa = 1e-3, conc_theta = 0.2, tau_min = 0.0, tau_max = 50.0;
    int tau_steps = 501;
    sedeph::Splittings split;
    std::string conc_out;
    auto* conc = app.add_subcommand("concurrence", "Reduced-state trajectory and concurrence along tau");
    add_state_options(conc, conc_state);
    conc->add_option("--kappa", conc_kappa, "Coupling strength kappa");
    conc->add_option("--theta", conc_theta, "Temperature k_B T/(hbar omega_c)");
    conc->add_option("--tau-min", tau_min, "Earliest time");
    conc->add_option("--tau-max", tau_max, "Latest time");
    conc->add_option("--tau-steps", tau_steps, "Time grid points");
    conc->add_option("--omega-a", split.omega_a, "Splitting of qubit A");
    conc->add_option("--omega-b", split.omega_b, "Splitting of qubit B");
    conc->add_option("--out", conc_out, "Output path prefix (stdout when omitted)");

    // oracle-check
    std::string oracle_path, oracle_out;
    auto* oracle = app.add_subcommand("oracle-check", "Brute-force Fock-space comparison from a JSON config");
    oracle->add_option("--config", oracle_path, "Oracle configuration JSON")->required();
    oracle->add_option("--out", oracle_out, "Output path prefix (stdout when omitted)");

    // dilation-demo
    double q00 = 0.5, q01_re = 0.5, q01_im = 0.0, dil_p = 0.5;
    auto* dil = app.add_subcommand("dilation-demo", "Partial-transpose spectra of the pure and mixed dilations");
    dil->add_option("--rho00", q00, "Qubit population rho00");
    dil->add_option("--rho01-re", q01_re, "Real part of rho01");
    dil->add_option("--rho01-im", q01_im, "Imaginary part of rho01");
    dil->add_option("--p", dil_p, "Dephasing parameter p in [0, 1]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*phase) {
            finish_config(phase_cfg, phase_state);
            phase_cfg.validate();
            const auto rows = sedeph::sweep_grid(phase_cfg);
            const std::string& p = phase_cfg.out_prefix;
            write_file(p + ".csv", [&](std::ostream& os) { sedeph::write_grid_csv(os, rows); });
            if (phase_overlays) {
                const auto curve_rows = sedeph::overlay_curves(phase_cfg);
                write_file(p + "_curves.csv", [&](std::ostream& os) { sedeph::write_curves_csv(os, curve_rows); });
            }
            write_file(p + "_meta.json", [&](std::ostream& os) {
                os << sedeph::io::sweep_meta_to_json(phase_cfg).dump(2) << '\n';
            });
            write_file(p + ".gp", [&](std::ostream& os) {
                sedeph::write_plot_script(os, phase_cfg, phase_overlays);
            });
            std::size_t counts[3] = {0, 0, 0};
            for (const auto& r : rows) ++counts[static_cast<int>(r.result.verdict)];
            std::cout << "rows " << rows.size() << " separable " << counts[0] << " entangled "
                      << counts[1] << " undetermined " << counts[2] << '\n';
        } else if (*curves) {
            finish_config(curve_cfg, curve_state);
            curve_cfg.validate();
            const auto rows = sedeph::overlay_curves(curve_cfg);
            write_file(curve_cfg.out_prefix + "_curves.csv",
                       [&](std::ostream& os) { sedeph::write_curves_csv(os, rows); });
        } else if (*tcrit) {
            const double theta = sedeph::tcrit_query(tcrit_kappa, tcrit_c);
            nlohmann::json j = {{"kappa", tcrit_kappa},
                                {"werner_c", tcrit_c},
                                {"threshold", std::log((1.0 + tcrit_c) / (2.0 * tcrit_c))},
                                {"theta_crit", theta}};
            std::cout << j.dump() << '\n';
        } else if (*conc) {
            if (tau_steps < 2 || !(tau_max > tau_min) || tau_min < 0.0) {
                throw sedeph::InputError("invalid tau grid");
            }
            const sedeph::XState x0 = load_state(conc_state);
            const auto bath = sedeph::BathModel::continuum(conc_kappa);
            const auto taus = sedeph::linspace(tau_min, tau_max, tau_steps);
            const auto traj = sedeph::reduced_trajectory(x0, bath, conc_theta, taus, split);
            auto emit = [&](std::ostream& os) {
                os << "tau,concurrence,decoherence_mag,rho14_re,rho14_im,rho23_re,rho23_im\n";
                for (const auto& pt : traj) {
                    os << sedeph::format_real(pt.tau) << ',' << sedeph::format_real(pt.concurrence) << ','
                       << sedeph::format_real(pt.decoherence_mag) << ','
                       << sedeph::format_real(pt.density(0, 3).real()) << ','
                       << sedeph::format_real(pt.density(0, 3).imag()) << ','
                       << sedeph::format_real(pt.density(1, 2).real()) << ','
                       << sedeph::format_real(pt.density(1, 2).imag()) << '\n';
                }
            };
            if (conc_out.empty()) emit(std::cout);
            else write_file(conc_out + "_concurrence.csv", emit);
        } else if (*oracle) {
            std::ifstream in(oracle_path);
            if (!in) throw sedeph::InputError("cannot open oracle config " + oracle_path);
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw sedeph::InputError(std::string("invalid JSON in oracle config: ") + e.what());
            }
            const auto req = sedeph::io::oracle_request_from_json(j);
            const auto rows = sedeph::oracle_check(req.config, req.taus);
            const std::string text = sedeph::io::oracle_report_to_json(req, rows).dump(2);
            if (oracle_out.empty()) std::cout << text << '\n';
            else write_file(oracle_out + "_oracle.json", [&](std::ostream& os) { os << text << '\n'; });
        } else if (*dil) {
            const auto q = sedeph::Qubit::make(q00, 1.0 - q00, {q01_re, q01_im});
            std::cout << sedeph::io::dilation_demo_to_json(q, dil_p).dump(2) << '\n';
        }
    } catch (const sedeph::InputError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const sedeph::Error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
