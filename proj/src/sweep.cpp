// sweep.cpp - Parallel deterministic grid evaluation and CSV/gnuplot output

#include "sedeph/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "sedeph/dynamics.hpp"
#include "sedeph/errors.hpp"

namespace sedeph {

void SweepConfig::validate() const {
    auto fail = [](const std::string& msg) { throw InputError(msg); };
    if (theta_steps < 2 || tau_steps < 2) fail("theta_steps and tau_steps must be >= 2");
    if (!(theta_min > 0.0) || !(theta_max > theta_min)) fail("theta range must be positive and ordered");
    if (theta_min < kThetaMin || theta_max > kThetaMax) fail("theta range must lie within [0.002, 1e4]");
    if (!(tau_min >= 0.0) || !(tau_max > tau_min)) fail("tau range must be nonnegative and ordered");
    if (!(kappa > 0.0) || !std::isfinite(kappa)) fail("kappa must be positive");
    if (threads == 0) fail("threads must be >= 1");
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 2) throw InputError("a grid needs at least 2 points");
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        out[static_cast<std::size_t>(i)] =
            i == steps - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
    }
    return out;
}

std::vector<double> SweepConfig::thetas() const { return linspace(theta_min, theta_max, theta_steps); }
std::vector<double> SweepConfig::taus() const { return linspace(tau_min, tau_max, tau_steps); }

namespace {

// Runs job(i) for i in [0, count) on `threads` workers. The first failure (by
// index) is rethrown after all workers stop.
template <class Job>
void parallel_for(std::size_t count, unsigned threads, const Job& job) {
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_at = count;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            {
                std::lock_guard lock(mu);
                if (failed_at < i) return;
            }
            try {
                job(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace

std::vector<GridRow> sweep_grid(const SweepConfig& cfg) {
    cfg.validate();
    const BathModel bath = BathModel::continuum(cfg.kappa);
    const CriteriaThresholds thresholds = CriteriaThresholds::from_state(cfg.state);
    const auto thetas = cfg.thetas();
    const auto taus = cfg.taus();
    std::vector<GridRow> rows(thetas.size() * taus.size());
    parallel_for(rows.size(), cfg.threads, [&](std::size_t i) {
        const double theta = thetas[i / taus.size()];
        const double tau = taus[i % taus.size()];
        try {
            rows[i] = {theta, tau, classify(thresholds, bath, theta, tau)};
        } catch (const Error& e) {
            std::ostringstream os;
            os << "grid point theta=" << format_real(theta) << " tau=" << format_real(tau)
               << ": " << e.what();
            throw NumericalError(os.str());
        }
    });
    return rows;
}

std::vector<CurveRow> overlay_curves(const SweepConfig& cfg) {
    cfg.validate();
    const BathModel bath = BathModel::continuum(cfg.kappa);
    const auto thetas = cfg.thetas();
    std::vector<CurveRow> rows(thetas.size());
    parallel_for(rows.size(), cfg.threads, [&](std::size_t i) {
        const double theta = thetas[i];
        rows[i].theta = theta;
        rows[i].tau_dec = decoherence_time(bath, theta);
        rows[i].tau_sd = sudden_death_time(cfg.state, bath, theta);
    });
    return rows;
}

double tcrit_query(double kappa, double c) {
    if (!(c > 0.0 && c <= 1.0)) throw RangeError("Werner parameter c must lie in (0, 1]");
    return critical_temperature(kappa, std::log((1.0 + c) / (2.0 * c)));
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows) {
    os << "theta,tau,s_value,e_value,s_log,e_log,s_threshold,e_threshold,verdict_code,verdict\n";
    for (const auto& r : rows) {
        const auto& c = r.result;
        os << format_real(r.theta) << ',' << format_real(r.tau) << ','
           << format_real(c.s_value.value) << ',' << format_real(c.e_value.value) << ','
           << format_real(c.s_value.log_value) << ',' << format_real(c.e_value.log_value) << ','
           << format_real(c.s_threshold) << ',' << format_real(c.e_threshold) << ','
           << static_cast<int>(c.verdict) << ',' << to_string(c.verdict) << '\n';
    }
}

void write_curves_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
    os << "theta,tau_dec,tau_sd\n";
    for (const auto& r : rows) {
        os << format_real(r.theta) << ',' << format_real(r.tau_dec) << ',';
        if (r.tau_sd) os << format_real(*r.tau_sd);
        os << '\n';
    }
}

void write_plot_script(std::ostream& os, const SweepConfig& cfg, bool with_curves) {
    const std::string& p = cfg.out_prefix;
    os << "# Temperature-time diagram: red = entangled, blue = separable, white = undetermined\n"
       << "set datafile separator ','\n"
       << "set terminal pngcairo size 900,700\n"
       << "set output '" << p << ".png'\n"
       << "set xlabel 'omega_c t'\n"
       << "set ylabel 'k_B T / (hbar omega_c)'\n"
       << "set xrange [" << format_real(cfg.tau_min) << ':' << format_real(cfg.tau_max) << "]\n"
       << "set yrange [" << format_real(cfg.theta_min) << ':' << format_real(cfg.theta_max) << "]\n"
       << "set cbrange [0:2]\n"
       << "set palette defined (0 '#3b6fd1', 1 '#d12b2b', 2 '#ffffff')\n"
       << "unset colorbox\n"
       << "set key outside\n"
       << "plot '" << p << ".csv' every ::1 using 2:1:9 with points pt 5 ps 0.6 palette notitle";
    if (with_curves) {
        if (cfg.overlay_decoherence) {
            os << ", \\\n     '" << p << "_curves.csv' every ::1 using 2:1 with lines lw 2 dt 2 lc 'black' title 'decoherence time'";
        }
        if (cfg.overlay_sudden_death) {
            os << ", \\\n     '" << p << "_curves.csv' every ::1 using 3:1 with lines lw 2 lc 'black' title 'sudden death'";
        }
    }
    os << '\n';
}

} // namespace sedeph
