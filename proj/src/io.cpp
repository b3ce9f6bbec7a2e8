// io.cpp - JSON conversion; malformed documents raise InputError

#include "sedeph/io.hpp"

#include <string>

#include "sedeph/errors.hpp"

namespace sedeph::io {

using nlohmann::json;

namespace {

double real_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw InputError(std::string("missing or non-numeric field '") + key + "'");
    }
    return j.at(key).get<double>();
}

cplx complex_field(const json& j, const char* key) {
    if (!j.contains(key)) return {0.0, 0.0};
    const json& v = j.at(key);
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw InputError(std::string("field '") + key + "' must be [re, im]");
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json spectrum_json(const DenseHermitian& m) {
    json out = json::array();
    const Eigen::VectorXd ev = m.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) out.push_back(ev(i));
    return out;
}

json matrix_json(const DenseHermitian& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.dim(); ++k) row.push_back(complex_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

json qubit_json(const Qubit& q) {
    return {{"rho00", q.rho00()}, {"rho11", q.rho11()}, {"rho01", complex_json(q.rho01())}};
}

} // namespace

XState xstate_from_json(const json& j) {
    if (!j.is_object()) throw InputError("state must be a JSON object");
    return XState::make(real_field(j, "rho11"), real_field(j, "rho22"), real_field(j, "rho33"),
                        real_field(j, "rho44"), complex_field(j, "rho14"), complex_field(j, "rho23"));
}

json xstate_to_json(const XState& x) {
    return {{"rho11", x.rho11()}, {"rho22", x.rho22()}, {"rho33", x.rho33()},
            {"rho44", x.rho44()}, {"rho14", complex_json(x.rho14())}, {"rho23", complex_json(x.rho23())}};
}

OracleRequest oracle_request_from_json(const json& j) {
    if (!j.is_object()) throw InputError("oracle config must be a JSON object");
    OracleRequest req;
    OracleConfig& cfg = req.config;
    if (!j.contains("modes") || !j.at("modes").is_array()) throw InputError("missing 'modes' array");
    for (const auto& m : j.at("modes")) cfg.modes.push_back({real_field(m, "omega"), real_field(m, "g2")});
    if (!j.contains("n_fock") || !j.at("n_fock").is_number_integer()) throw InputError("missing integer 'n_fock'");
    cfg.n_fock = j.at("n_fock").get<int>();
    cfg.theta = real_field(j, "theta");
    if (j.contains("state")) {
        cfg.x0 = xstate_from_json(j.at("state"));
    } else if (j.contains("werner_c")) {
        cfg.x0 = WernerParams{real_field(j, "werner_c")}.to_x_state();
    } else {
        throw InputError("oracle config needs 'state' or 'werner_c'");
    }
    if (j.contains("omega_a")) cfg.split.omega_a = real_field(j, "omega_a");
    if (j.contains("omega_b")) cfg.split.omega_b = real_field(j, "omega_b");
    if (j.contains("max_dim")) cfg.max_dim = j.at("max_dim").get<Eigen::Index>();
    if (!j.contains("taus") || !j.at("taus").is_array()) throw InputError("missing 'taus' array");
    for (const auto& t : j.at("taus")) {
        if (!t.is_number()) throw InputError("'taus' must contain numbers");
        req.taus.push_back(t.get<double>());
    }
    cfg.validate();
    return req;
}

json oracle_report_to_json(const OracleRequest& req, const std::vector<OracleComparison>& rows) {
    json modes = json::array();
    for (const auto& m : req.config.modes) modes.push_back({{"omega", m.omega}, {"g2", m.g2}});
    json points = json::array();
    bool all_consistent = true;
    double worst_diff = 0.0;
    for (const auto& r : rows) {
        all_consistent = all_consistent && r.peres_consistent;
        worst_diff = std::max(worst_diff, r.max_reduced_diff);
        json p = {{"tau", r.tau},
                  {"max_reduced_diff", r.max_reduced_diff},
                  {"coherence14", {{"oracle", r.coherence14_oracle}, {"analytic", r.coherence14_analytic}}},
                  {"coherence23", {{"oracle", r.coherence23_oracle}, {"analytic", r.coherence23_analytic}}},
                  {"pt_min_eig", {{"system_vs_env", r.pt_system_env}, {"a_vs_env", r.pt_a_env}, {"b_vs_env", r.pt_b_env}}},
                  {"criteria_verdict", std::string(to_string(r.criteria_verdict))},
                  {"peres_consistent", r.peres_consistent}};
        if (r.pt_env_pair) p["pt_min_eig"]["env_pair"] = *r.pt_env_pair;
        // A nonnegative PT spectrum never certifies separability.
        p["oracle_system_env"] = r.pt_system_env < 0.0 ? "entangled" : "inconclusive";
        points.push_back(p);
    }
    return {{"config",
             {{"modes", modes},
              {"n_fock", req.config.n_fock},
              {"theta", req.config.theta},
              {"state", xstate_to_json(req.config.x0)},
              {"omega_a", req.config.split.omega_a},
              {"omega_b", req.config.split.omega_b}}},
            {"points", points},
            {"summary", {{"max_reduced_diff", worst_diff}, {"peres_consistent", all_consistent}}}};
}

json dilation_demo_to_json(const Qubit& q, double p) {
    const DenseHermitian pure = pure_dilation_total(q, p);
    const DenseHermitian mixed = mixed_dilation_total(q, p);
    const DenseHermitian pure_pt = partial_transpose(pure, 2, 2);
    const DenseHermitian mixed_pt = partial_transpose(mixed, 2, 2);
    return {{"input", qubit_json(q)},
            {"p", p},
            {"channel_output", qubit_json(dephase_channel(q, p))},
            {"pure_dilation",
             {{"total_state", matrix_json(pure)},
              {"reduced", qubit_json(reduce_to_system(pure))},
              {"pt_spectrum", spectrum_json(pure_pt)},
              {"pt_determinant", pure_pt.matrix().determinant().real()},
              {"pt_determinant_closed_form", pure_dilation_pt_determinant(q, p)}}},
            {"mixed_dilation",
             {{"total_state", matrix_json(mixed)},
              {"reduced", qubit_json(reduce_to_system(mixed))},
              {"pt_spectrum", spectrum_json(mixed_pt)}}}};
}

json sweep_meta_to_json(const SweepConfig& cfg) {
    json state = xstate_to_json(cfg.state);
    json meta = {{"tool", "sedeph"},
                 {"version", SEDEPH_VERSION},
                 {"kappa", cfg.kappa},
                 {"state", state},
                 {"theta", {{"min", cfg.theta_min}, {"max", cfg.theta_max}, {"steps", cfg.theta_steps}}},
                 {"tau", {{"min", cfg.tau_min}, {"max", cfg.tau_max}, {"steps", cfg.tau_steps}}},
                 {"overlays", {{"decoherence_time", cfg.overlay_decoherence}, {"sudden_death", cfg.overlay_sudden_death}}},
                 {"threads", cfg.threads},
                 {"units", "hbar = k_B = omega_c = 1"},
                 {"spectral_density", "J(w) = kappa w for w <= 1, 0 above"}};
    if (cfg.werner_c) meta["werner_c"] = *cfg.werner_c;
    return meta;
}

} // namespace sedeph::io
