// bath.cpp - Dephasing kernels for the Ohmic continuum and discrete mode lists

#include "sedeph/bath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sedeph/errors.hpp"
#include "sedeph/quadrature.hpp"
#include "sedeph/special.hpp"

namespace sedeph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_point(double theta, double tau) {
    if (!(theta >= kThetaMin && theta <= kThetaMax)) {
        std::ostringstream os;
        os << "theta = " << theta << " outside supported range [" << kThetaMin << ", "
           << kThetaMax << "]";
        throw DomainError(os.str());
    }
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw DomainError("tau must be finite and nonnegative");
    }
}

// (1 - cos(w tau)) without cancellation.
inline double one_minus_cos(double w, double tau) {
    const double s = std::sin(0.5 * w * tau);
    return 2.0 * s * s;
}

inline double coth(double x) { return 1.0 / std::tanh(x); }

// log(2 sinh(x)) for x > 0.
inline double log_two_sinh(double x) { return x + std::log(-std::expm1(-2.0 * x)); }

double integrate_unit(const auto& f, double tau) {
    const auto breaks = quad::oscillation_breaks(0.0, 1.0, tau);
    return quad::integrate(f, breaks).value;
}

double log_sum_exp(const std::vector<double>& logs) {
    double peak = -kInf;
    for (double l : logs) peak = std::max(peak, l);
    if (peak == -kInf) return -kInf;
    double acc = 0.0;
    for (double l : logs) acc += std::exp(l - peak);
    return peak + std::log(acc);
}

} // namespace

BathModel BathModel::continuum(double kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw RangeError("kappa must be positive and finite");
    }
    return BathModel(OhmicContinuum{kappa});
}

BathModel BathModel::discrete(std::vector<Mode> modes) {
    if (modes.empty()) throw RangeError("discrete bath needs at least one mode");
    for (const auto& m : modes) {
        if (!(m.omega > 0.0) || !std::isfinite(m.omega)) {
            throw RangeError("mode frequencies must be positive and finite");
        }
        if (!(m.g2 >= 0.0) || !std::isfinite(m.g2)) {
            throw RangeError("mode couplings g2 must be nonnegative and finite");
        }
    }
    return BathModel(DiscreteModes{std::move(modes)});
}

BathModel BathModel::discretized_ohmic(double kappa, int mode_count) {
    if (mode_count < 1) throw RangeError("mode_count must be positive");
    std::vector<Mode> modes;
    modes.reserve(static_cast<std::size_t>(mode_count));
    const double dw = 1.0 / mode_count;
    for (int k = 0; k < mode_count; ++k) {
        const double w = (k + 0.5) * dw;
        modes.push_back({w, kappa * w * dw});
    }
    return discrete(std::move(modes));
}

KernelValue KernelValue::from_log(double log_value) {
    return {log_value, std::exp(log_value)};
}

KernelValue KernelValue::zero() {
    return {-kInf, 0.0};
}

bool kernel_le(const KernelValue& kv, double threshold) {
    if (threshold == kInf) return true;
    if (threshold < 0.0) return false;
    if (threshold == 0.0) return kv.value == 0.0;
    return kv.log_value <= std::log(threshold);
}

bool kernel_gt(const KernelValue& kv, double threshold) {
    return !kernel_le(kv, threshold);
}

double gamma_dph(const BathModel& bath, double theta, double tau) {
    check_point(theta, tau);
    if (tau == 0.0) return 0.0;
    const double half_beta = 0.5 / theta;
    if (bath.is_continuum()) {
        const double kappa = bath.ohmic().kappa;
        auto f = [&](double w) { return coth(w * half_beta) * std::sin(w * tau); };
        return 4.0 * kappa * integrate_unit(f, tau);
    }
    double acc = 0.0;
    for (const auto& m : bath.modes().modes) {
        acc += m.g2 * coth(m.omega * half_beta) * std::sin(m.omega * tau) / m.omega;
    }
    return 4.0 * acc;
}

double big_gamma(const BathModel& bath, double theta, double tau) {
    check_point(theta, tau);
    if (tau == 0.0) return 0.0;
    const double half_beta = 0.5 / theta;
    if (bath.is_continuum()) {
        const double kappa = bath.ohmic().kappa;
        auto f = [&](double w) { return coth(w * half_beta) * one_minus_cos(w, tau) / w; };
        return 4.0 * kappa * integrate_unit(f, tau);
    }
    double acc = 0.0;
    for (const auto& m : bath.modes().modes) {
        acc += m.g2 * coth(m.omega * half_beta) * one_minus_cos(m.omega, tau) / (m.omega * m.omega);
    }
    return 4.0 * acc;
}

KernelValue se_kernel(SEKernel kind, const BathModel& bath, double theta, double tau) {
    check_point(theta, tau);
    if (tau == 0.0) return KernelValue::zero();
    const double beta = 1.0 / theta;

    if (bath.is_continuum()) {
        const double kappa = bath.ohmic().kappa;
        // The growing weights are divided by exp(beta), their value at the
        // cutoff, and the factor is restored in the log.
        double log_scale = 0.0;
        double integral = 0.0;
        switch (kind) {
        case SEKernel::S: {
            auto f = [&](double w) { return std::exp((w - 1.0) * beta) * one_minus_cos(w, tau) / w; };
            integral = integrate_unit(f, tau);
            log_scale = beta;
            break;
        }
        case SEKernel::Sbar: {
            auto f = [&](double w) { return std::exp(-w * beta) * one_minus_cos(w, tau) / w; };
            integral = integrate_unit(f, tau);
            break;
        }
        case SEKernel::E: {
            // 2 sinh(w beta) exp(-beta) = -exp((w-1) beta) expm1(-2 w beta)
            auto f = [&](double w) {
                return -std::exp((w - 1.0) * beta) * std::expm1(-2.0 * w * beta) *
                       one_minus_cos(w, tau) / w;
            };
            integral = integrate_unit(f, tau);
            log_scale = beta;
            break;
        }
        }
        if (!(integral > 0.0)) return KernelValue::zero();
        return KernelValue::from_log(std::log(4.0 * kappa) + log_scale + std::log(integral));
    }

    std::vector<double> logs;
    logs.reserve(bath.modes().modes.size());
    for (const auto& m : bath.modes().modes) {
        const double base = m.g2 * one_minus_cos(m.omega, tau) / (m.omega * m.omega);
        if (!(base > 0.0)) continue;
        double lw = 0.0;
        switch (kind) {
        case SEKernel::S: lw = m.omega * beta; break;
        case SEKernel::Sbar: lw = -m.omega * beta; break;
        case SEKernel::E: lw = log_two_sinh(m.omega * beta); break;
        }
        logs.push_back(std::log(4.0 * base) + lw);
    }
    if (logs.empty()) return KernelValue::zero();
    return KernelValue::from_log(log_sum_exp(logs));
}

double e_asymptotic(double kappa, double theta, double tau) {
    if (tau < 10.0) throw DomainError("e_asymptotic is only valid for tau >= 10");
    const double beta = 1.0 / theta;
    return 8.0 * kappa * shi(beta) -
           2.0 * kappa * tau / (tau * tau + beta * beta) * std::exp(beta) * std::sin(tau);
}

double critical_temperature(double kappa, double threshold) {
    if (!(kappa > 0.0) || !(threshold > 0.0)) {
        throw RangeError("critical_temperature needs kappa > 0 and threshold > 0");
    }
    const double log_target = std::log(threshold) - std::log(8.0 * kappa);
    // Shi(1/theta) falls monotonically as theta grows.
    auto excess = [&](double log_theta) { return log_shi(std::exp(-log_theta)) - log_target; };
    double lo = std::log(1e-4), hi = std::log(1e4);
    if (!(excess(lo) > 0.0 && excess(hi) < 0.0)) {
        std::ostringstream os;
        os << "threshold " << threshold << " not attainable for kappa " << kappa
           << " with theta in [1e-4, 1e4]";
        throw BracketError(os.str());
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0) lo = mid; else hi = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

double gamma_bound(const BathModel& bath, double theta, double tau) {
    check_point(theta, tau);
    if (bath.is_continuum()) {
        // coth(x) <= 1 + 1/x and integral_0^tau |sin u|/u du <= min(tau, 1 + ln max(tau, 1)).
        const double log_part = std::min(tau, 1.0 + std::log(std::max(tau, 1.0)));
        return 4.0 * bath.ohmic().kappa * (1.0 + 2.0 * theta * log_part);
    }
    double acc = 0.0;
    for (const auto& m : bath.modes().modes) {
        acc += m.g2 * coth(0.5 * m.omega / theta) * std::min(tau, 1.0 / m.omega);
    }
    return 4.0 * acc;
}

} // namespace sedeph
