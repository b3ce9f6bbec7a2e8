// dynamics.hpp - Exact reduced two-qubit dephasing dynamics

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sedeph/bath.hpp"
#include "sedeph/xstate.hpp"

namespace sedeph {

// Qubit splittings (reduced units). Only phases depend on them.
struct Splittings {
    double omega_a{0.0};
    double omega_b{0.0};
};

struct DecoherenceFactor {
    double magnitude{1.0};   // exp(-Gamma(tau))
    double phase_plus{0.0};  // -(omega_a + omega_b) tau, multiplies rho14
    double phase_minus{0.0}; // -(omega_a - omega_b) tau, multiplies rho23
};

DecoherenceFactor decoherence_factor(const BathModel& bath, double theta, double tau,
                                     Splittings split = {});

DenseHermitian reduced_state(const XState& x0, const BathModel& bath, double theta, double tau,
                             Splittings split = {});

// Integrates the time-local master equation with classical RK4 on a uniform
// grid of `steps` intervals. Independent of reduced_state: it samples the
// rate gamma_dph rather than the integrated exponent.
DenseHermitian evolve_master(const XState& x0, const BathModel& bath, double theta,
                             double tau_end, int steps, Splittings split = {});

double concurrence_at(const XState& x0, const BathModel& bath, double theta, double tau);

struct ReducedTrajectoryPoint {
    double tau;
    DenseHermitian density;
    double concurrence;
    double decoherence_mag;
};

std::vector<ReducedTrajectoryPoint> reduced_trajectory(const XState& x0, const BathModel& bath,
                                                       double theta, std::span<const double> taus,
                                                       Splittings split = {});

// Crossing scans cover tau in [0, kScanWindow].
inline constexpr double kScanWindow = 1e4;
inline constexpr double kScanStep = 0.01;

// First tau with Gamma(tau) = target, or nullopt if not reached in the scan
// window. The scan never steps further than the minimum grid step or the
// distance Gamma could travel under gamma_bound, so no earlier crossing can
// be jumped; the bracket is then bisected.
std::optional<double> first_gamma_crossing(const BathModel& bath, double theta, double target);

// First tau with Gamma = 1. Throws NotReachedError if outside the window.
double decoherence_time(const BathModel& bath, double theta);

// First tau with vanishing concurrence; nullopt if x0 is unentangled or the
// crossing is not reached.
std::optional<double> sudden_death_time(const XState& x0, const BathModel& bath, double theta);

// Gamma value at which concurrence first vanishes; nullopt when x0 is
// unentangled or can never lose its entanglement.
std::optional<double> sudden_death_gamma(const XState& x0);

} // namespace sedeph
