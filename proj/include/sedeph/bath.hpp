// bath.hpp - Bath models and the dephasing kernels built on them
//
// Reduced units throughout: hbar = k_B = omega_c = 1, so tau = omega_c t and
// theta = k_B T / (hbar omega_c). The continuum bath is Ohmic with a hard
// cutoff, J(w) = kappa * w on [0, 1] and zero above.

#pragma once

#include <variant>
#include <vector>

namespace sedeph {

inline constexpr double kThetaMin = 0.002;
inline constexpr double kThetaMax = 1e4;

struct Mode {
    double omega{1.0};
    double g2{0.0}; // |g|^2
};

struct OhmicContinuum {
    double kappa{1e-3};
};

struct DiscreteModes {
    std::vector<Mode> modes;
};

class BathModel {
public:
    // Throws RangeError on non-positive or non-finite kappa.
    static BathModel continuum(double kappa);
    // Throws RangeError on an empty list, non-positive frequencies or
    // negative couplings.
    static BathModel discrete(std::vector<Mode> modes);

    // M equally spaced modes approximating the continuum: w_k = (k + 1/2)/M,
    // g2_k = kappa * w_k / M.
    static BathModel discretized_ohmic(double kappa, int mode_count);

    bool is_continuum() const { return std::holds_alternative<OhmicContinuum>(model_); }
    const OhmicContinuum& ohmic() const { return std::get<OhmicContinuum>(model_); }
    const DiscreteModes& modes() const { return std::get<DiscreteModes>(model_); }

private:
    explicit BathModel(std::variant<OhmicContinuum, DiscreteModes> m) : model_(std::move(m)) {}

    std::variant<OhmicContinuum, DiscreteModes> model_;
};

// A nonnegative kernel held by its logarithm. value is exp(log_value), which
// is +inf once log_value passes ~709; comparisons should go through
// kernel_le / kernel_gt.
struct KernelValue {
    double log_value;
    double value;

    static KernelValue from_log(double log_value);
    static KernelValue zero();
};

// kv <= threshold and kv > threshold with extended-real semantics
// (threshold may be +inf).
bool kernel_le(const KernelValue& kv, double threshold);
bool kernel_gt(const KernelValue& kv, double threshold);

enum class SEKernel {
    S,    // weight exp(w/theta)
    Sbar, // weight exp(-w/theta)
    E,    // weight 2 sinh(w/theta), equal to S - Sbar
};

// Time-local dephasing rate; may be negative.
double gamma_dph(const BathModel& bath, double theta, double tau);

// Decoherence exponent Gamma(tau) = integral_0^tau gamma_dph, always >= 0.
double big_gamma(const BathModel& bath, double theta, double tau);

KernelValue se_kernel(SEKernel kind, const BathModel& bath, double theta, double tau);

// Long-time expansion of the E kernel for the continuum bath. Requires tau >= 10.
double e_asymptotic(double kappa, double theta, double tau);

// Solves 8 kappa Shi(1/theta) = threshold for theta by bisection in log(theta)
// over [1e-4, 1e4]. Throws BracketError if no root lies in that range.
double critical_temperature(double kappa, double threshold);

// Upper bound on |gamma_dph| over [0, tau]; used to step crossing scans
// without skipping a root.
double gamma_bound(const BathModel& bath, double theta, double tau);

} // namespace sedeph
