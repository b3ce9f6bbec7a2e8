// io.hpp - JSON readers and writers for states, oracle runs, and metadata

#pragma once

#include <vector>

#include <json.hpp>

#include "sedeph/dilation.hpp"
#include "sedeph/fock_oracle.hpp"
#include "sedeph/sweep.hpp"
#include "sedeph/xstate.hpp"

namespace sedeph::io {

// {"rho11":r, "rho22":r, "rho33":r, "rho44":r, "rho14":[re,im], "rho23":[re,im]}
XState xstate_from_json(const nlohmann::json& j);
nlohmann::json xstate_to_json(const XState& x);

struct OracleRequest {
    OracleConfig config;
    std::vector<double> taus;
};

// {"modes":[{"omega":w,"g2":g}], "n_fock":n, "theta":t,
//  "state":{...} | "werner_c":c, "omega_a":a, "omega_b":b,
//  "taus":[...], "max_dim":d}
OracleRequest oracle_request_from_json(const nlohmann::json& j);

nlohmann::json oracle_report_to_json(const OracleRequest& req,
                                     const std::vector<OracleComparison>& rows);

nlohmann::json dilation_demo_to_json(const Qubit& q, double p);

nlohmann::json sweep_meta_to_json(const SweepConfig& cfg);

} // namespace sedeph::io
