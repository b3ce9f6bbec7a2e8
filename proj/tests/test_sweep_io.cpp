#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "sedeph/errors.hpp"
#include "sedeph/io.hpp"
#include "sedeph/sweep.hpp"

using namespace sedeph;
using nlohmann::json;

namespace {

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.theta_steps = 12;
    cfg.tau_steps = 15;
    return cfg;
}

std::string grid_csv(const SweepConfig& cfg) {
    std::ostringstream os;
    write_grid_csv(os, sweep_grid(cfg));
    return os.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SEDEPH_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("linspace") {
    const auto v = linspace(0.05, 0.3, 100);
    REQUIRE(v.size() == 100);
    CHECK(v.front() == 0.05);
    CHECK(v.back() == 0.3);
    CHECK_THROWS_AS(linspace(0.0, 1.0, 1), InputError);
}

TEST_CASE("SweepConfig validation") {
    SweepConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.theta_min = 0.001;
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg = SweepConfig{};
    cfg.theta_max = 0.01;
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg = SweepConfig{};
    cfg.tau_steps = 1;
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg = SweepConfig{};
    cfg.tau_min = -1.0;
    CHECK_THROWS_AS(cfg.validate(), InputError);
}

TEST_CASE("sweep_grid layout") {
    const SweepConfig cfg = small_config();
    const auto rows = sweep_grid(cfg);
    REQUIRE(rows.size() == 12 * 15);
    const auto thetas = cfg.thetas();
    const auto taus = cfg.taus();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].theta == thetas[i / 15]);
        CHECK(rows[i].tau == taus[i % 15]);
        if (rows[i].tau == 0.0) CHECK(rows[i].result.verdict == Verdict::Separable);
    }
}

TEST_CASE("sweep output is deterministic and byte stable") {
    SweepConfig cfg = small_config();
    const std::string one = grid_csv(cfg);
    cfg.threads = 4;
    CHECK(grid_csv(cfg) == one);
    CHECK(grid_csv(cfg) == one);

    std::istringstream in(one);
    std::string line;
    std::getline(in, line);
    CHECK(line == "theta,tau,s_value,e_value,s_log,e_log,s_threshold,e_threshold,verdict_code,verdict");
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        CHECK(line.find("theta") == std::string::npos);
        CHECK(line.find('\r') == std::string::npos);
    }
    CHECK(lines == 12 * 15);
}

TEST_CASE("format_real") {
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("overlay_curves") {
    SweepConfig cfg = small_config();
    std::ostringstream os;
    const auto none = overlay_curves(cfg);
    REQUIRE(none.size() == 12);
    for (const CurveRow& r : none) CHECK_FALSE(r.tau_sd.has_value());
    write_curves_csv(os, none);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "theta,tau_dec,tau_sd");
    std::getline(in, line);
    CHECK(line.back() == ',');

    cfg.state = WernerParams{0.5}.to_x_state();
    cfg.werner_c = 0.5;
    const auto both = overlay_curves(cfg);
    for (std::size_t i = 0; i < both.size(); ++i) {
        REQUIRE(both[i].tau_sd.has_value());
        CHECK(std::isfinite(both[i].tau_dec));
        if (i > 0) {
            CHECK(both[i].tau_dec < both[i - 1].tau_dec);
            CHECK(*both[i].tau_sd < *both[i - 1].tau_sd);
        }
    }
}

TEST_CASE("tcrit_query") {
    CHECK(tcrit_query(1e-3, 0.2) == doctest::Approx(0.1345).epsilon(0.01));
    CHECK(tcrit_query(1e-3, 0.9) == doctest::Approx(0.29).epsilon(0.01));
    CHECK(tcrit_query(1.0, 0.5) == doctest::Approx(19.7).epsilon(0.01));
    CHECK_THROWS_AS(tcrit_query(1e-3, 0.0), RangeError);
    CHECK_THROWS_AS(tcrit_query(1e-3, 1.5), RangeError);
}

TEST_CASE("plot script") {
    std::ostringstream os;
    write_plot_script(os, SweepConfig{}, true);
    const std::string gp = os.str();
    CHECK(gp.find("phase.csv") != std::string::npos);
    CHECK(gp.find("phase_curves.csv") != std::string::npos);
}

TEST_CASE("JSON round trips and errors") {
    const XState x = XState::make(0.3, 0.2, 0.2, 0.3, cplx(0.1, 0.05), cplx(-0.12, 0.02));
    const XState back = io::xstate_from_json(io::xstate_to_json(x));
    CHECK(back.rho14() == x.rho14());
    CHECK(back.rho23() == x.rho23());
    CHECK(back.rho44() == x.rho44());

    CHECK_THROWS_AS(io::xstate_from_json(json::parse(R"({"rho11":1})")), InputError);
    CHECK_THROWS_AS(io::xstate_from_json(json::parse(R"({"rho11":0.5,"rho22":0.5,"rho33":0.5,"rho44":0.5})")),
                    TraceError);
    CHECK_THROWS_AS(io::xstate_from_json(json::parse(R"([1,2])")), InputError);

    const auto req = io::oracle_request_from_json(json::parse(
        R"({"modes":[{"omega":0.7,"g2":5e-4}],"n_fock":25,"theta":0.3,"werner_c":0.5,"taus":[0,1,2]})"));
    CHECK(req.config.n_fock == 25);
    CHECK(req.taus.size() == 3);
    CHECK(req.config.x0.rho23().real() == doctest::Approx(-0.25));
    CHECK_THROWS_AS(io::oracle_request_from_json(json::parse(R"({"n_fock":4})")), InputError);
    CHECK_THROWS_AS(io::oracle_request_from_json(json::parse(
                        R"({"modes":[{"omega":0.7,"g2":5e-4}],"n_fock":2.5,"theta":0.3,"taus":[1]})")),
                    InputError);

    const json meta = io::sweep_meta_to_json(SweepConfig{});
    CHECK(meta.contains("version"));
    CHECK(meta.at("kappa").get<double>() == 1e-3);
}

TEST_CASE("command line exit codes") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "sedeph_cli_test";
    fs::create_directories(dir);
    const std::string prefix = (dir / "grid").string();

    CHECK(run_cli("tcrit --kappa 1e-3 --werner-c 0.2") == 0);
    CHECK(run_cli("tcrit --kappa 1e-3 --werner-c 2") == 2);
    CHECK(run_cli("phase-diagram --werner-c 0.2 --theta-min 0.0001") == 2);
    CHECK(run_cli("no-such-command") == 2);
    CHECK(run_cli("phase-diagram --werner-c 0.2 --theta-steps 4 --tau-steps 5 --overlays --out " + prefix) == 0);
    for (const char* suffix : {".csv", "_curves.csv", "_meta.json", ".gp"})
        CHECK(fs::exists(prefix + suffix));

    const std::string bad = (dir / "bad.json").string();
    std::ofstream(bad) << R"({"modes":[{"omega":0.1,"g2":0.01}],"n_fock":4,"theta":1.0,"werner_c":0.5,"taus":[1]})";
    CHECK(run_cli("oracle-check --config " + bad) == 2);
    CHECK(run_cli("dilation-demo --p 0.5") == 0);
    fs::remove_all(dir);
}
