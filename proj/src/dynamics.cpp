// dynamics.cpp - Reduced state, master-equation integration, crossing times

#include "sedeph/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sedeph/errors.hpp"

namespace sedeph {

DecoherenceFactor decoherence_factor(const BathModel& bath, double theta, double tau,
                                     Splittings split) {
    DecoherenceFactor f;
    f.magnitude = std::exp(-big_gamma(bath, theta, tau));
    f.phase_plus = -(split.omega_a + split.omega_b) * tau;
    f.phase_minus = -(split.omega_a - split.omega_b) * tau;
    return f;
}

DenseHermitian reduced_state(const XState& x0, const BathModel& bath, double theta, double tau,
                             Splittings split) {
    const DecoherenceFactor f = decoherence_factor(bath, theta, tau, split);
    Eigen::Matrix4cd m = x0.matrix();
    const cplx plus = std::polar(f.magnitude, f.phase_plus);
    const cplx minus = std::polar(f.magnitude, f.phase_minus);
    m(0, 3) *= plus;
    m(3, 0) = std::conj(m(0, 3));
    m(1, 2) *= minus;
    m(2, 1) = std::conj(m(1, 2));
    return DenseHermitian(m);
}

namespace {

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

} // namespace

DenseHermitian evolve_master(const XState& x0, const BathModel& bath, double theta,
                             double tau_end, int steps, Splittings split) {
    if (steps < 1) throw RangeError("evolve_master needs steps >= 1");
    if (!(tau_end >= 0.0)) throw DomainError("tau_end must be nonnegative");

    Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero();
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    const Eigen::Matrix4cd za = kron2(z, id);
    const Eigen::Matrix4cd zb = kron2(id, z);
    const Eigen::Matrix4cd h = 0.5 * split.omega_a * za + 0.5 * split.omega_b * zb;
    const cplx i_unit{0.0, 1.0};

    auto rhs = [&](const Eigen::Matrix4cd& rho, double rate) -> Eigen::Matrix4cd {
        return -i_unit * (h * rho - rho * h) - 0.5 * rate * (rho - za * rho * za);
    };

    const double dt = tau_end / steps;
    Eigen::Matrix4cd rho = x0.matrix();
    double rate_start = gamma_dph(bath, theta, 0.0);
    for (int n = 0; n < steps; ++n) {
        const double t = n * dt;
        const double rate_mid = gamma_dph(bath, theta, t + 0.5 * dt);
        const double rate_end = gamma_dph(bath, theta, t + dt);
        const Eigen::Matrix4cd k1 = rhs(rho, rate_start);
        const Eigen::Matrix4cd k2 = rhs(rho + 0.5 * dt * k1, rate_mid);
        const Eigen::Matrix4cd k3 = rhs(rho + 0.5 * dt * k2, rate_mid);
        const Eigen::Matrix4cd k4 = rhs(rho + dt * k3, rate_end);
        rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rate_start = rate_end;
    }
    // Restore exact Hermiticity lost to rounding.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DenseHermitian(rho);
}

double concurrence_at(const XState& x0, const BathModel& bath, double theta, double tau) {
    return concurrence_x(x0, std::exp(-big_gamma(bath, theta, tau)));
}

std::vector<ReducedTrajectoryPoint> reduced_trajectory(const XState& x0, const BathModel& bath,
                                                       double theta, std::span<const double> taus,
                                                       Splittings split) {
    std::vector<ReducedTrajectoryPoint> out;
    out.reserve(taus.size());
    for (double tau : taus) {
        const DecoherenceFactor f = decoherence_factor(bath, theta, tau, split);
        Eigen::Matrix4cd m = x0.matrix();
        m(0, 3) *= std::polar(f.magnitude, f.phase_plus);
        m(3, 0) = std::conj(m(0, 3));
        m(1, 2) *= std::polar(f.magnitude, f.phase_minus);
        m(2, 1) = std::conj(m(1, 2));
        out.push_back({tau, DenseHermitian(m), concurrence_x(x0, f.magnitude), f.magnitude});
    }
    return out;
}

std::optional<double> first_gamma_crossing(const BathModel& bath, double theta, double target) {
    if (!(target > 0.0)) return 0.0;
    if (!bath.is_continuum()) {
        // A finite mode list bounds Gamma by 8 sum g2 coth / w^2.
        double sup = 0.0;
        for (const auto& m : bath.modes().modes) {
            sup += m.g2 / std::tanh(0.5 * m.omega / theta) / (m.omega * m.omega);
        }
        if (8.0 * sup < target) return std::nullopt;
    }
    const double slope_bound = gamma_bound(bath, theta, kScanWindow);

    double lo = 0.0;
    double gamma_lo = 0.0;
    double hi = 0.0;
    bool found = false;
    while (lo < kScanWindow) {
        const double reach = (target - gamma_lo) / slope_bound;
        hi = std::min(kScanWindow, lo + std::max(kScanStep, reach));
        const double gamma_hi = big_gamma(bath, theta, hi);
        if (gamma_hi >= target) {
            found = true;
            break;
        }
        lo = hi;
        gamma_lo = gamma_hi;
    }
    if (!found) return std::nullopt;

    for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (big_gamma(bath, theta, mid) >= target) hi = mid; else lo = mid;
    }
    return 0.5 * (lo + hi);
}

double decoherence_time(const BathModel& bath, double theta) {
    const auto t = first_gamma_crossing(bath, theta, 1.0);
    if (!t) throw NotReachedError("Gamma never reaches 1 within the scan window");
    return *t;
}

std::optional<double> sudden_death_gamma(const XState& x0) {
    // Concurrence vanishes once |rho_ij| e^{-Gamma} <= sqrt(...) on both branches.
    double ratio = 0.0;
    const auto branch = [&](double coherence, double partner) {
        if (coherence == 0.0) return;
        if (partner == 0.0) {
            ratio = std::numeric_limits<double>::infinity();
            return;
        }
        ratio = std::max(ratio, coherence / partner);
    };
    branch(std::abs(x0.rho23()), std::sqrt(x0.rho11() * x0.rho44()));
    branch(std::abs(x0.rho14()), std::sqrt(x0.rho22() * x0.rho33()));
    if (!(ratio > 1.0) || !std::isfinite(ratio)) return std::nullopt;
    return std::log(ratio);
}

std::optional<double> sudden_death_time(const XState& x0, const BathModel& bath, double theta) {
    const auto target = sudden_death_gamma(x0);
    if (!target) return std::nullopt;
    return first_gamma_crossing(bath, theta, *target);
}

} // namespace sedeph
