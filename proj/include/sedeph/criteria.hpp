// criteria.hpp - System-environment separability and entanglement verdicts
//
// Separability holds while the partial P function stays positive, which for
// an X state reduces to S(theta, tau) <= separability_threshold(x0).
// Entanglement is certified by a negative partial-transpose expectation in a
// coherent-state family of test states, which reduces to
// E(theta, tau) > entanglement_threshold(x0, v). Both tests are sufficient
// only, so a point may satisfy neither.

#pragma once

#include <string_view>

#include "sedeph/bath.hpp"
#include "sedeph/xstate.hpp"

namespace sedeph {

// Amplitudes (r, s, t, u) of the system part of the test state. The sign
// pattern (r, -s, -t, u) of the coherent-state test vector is already folded
// into entanglement_threshold.
struct TestVector {
    cplx r, s, t, u;

    // Throws InputError unless |r|^2 + |s|^2 + |t|^2 + |u|^2 = 1.
    static TestVector make(cplx r, cplx s, cplx t, cplx u);
};

enum class Verdict { Separable = 0, Entangled = 1, Undetermined = 2 };

std::string_view to_string(Verdict v);

struct SEClassification {
    Verdict verdict{Verdict::Undetermined};
    KernelValue s_value{KernelValue::zero()};
    KernelValue e_value{KernelValue::zero()};
    double s_threshold{0.0};
    double e_threshold{0.0};
};

// min over the two coherences of (1/2) ln(partner populations / |coherence|^2).
// A vanishing coherence contributes +inf.
double separability_threshold(const XState& x0);

// Lowest eigenvector of the transposed initial state.
TestVector optimal_test_vector(const XState& x0);

// ln(-num/den) for den < 0, +inf otherwise, with num = sum rho_ii |v_i|^2 and
// den = 2 Re(rho23 s t*) + 2 Re(rho14 r u*).
double entanglement_threshold(const XState& x0, const TestVector& v);

enum class PtSign { NonNegative, Negative };

// Sign of the partial-transpose expectation value in the test state. After
// dropping positive prefactors it is the sign of num + exp(E) * den.
PtSign epsilon_pt_sign(const XState& x0, const TestVector& v, const BathModel& bath,
                       double theta, double tau);

// Thresholds depend only on x0; sweeps compute them once.
struct CriteriaThresholds {
    double separability;
    double entanglement;

    static CriteriaThresholds from_state(const XState& x0);
};

// Throws InternalError if both criteria fire.
SEClassification classify(const CriteriaThresholds& thresholds, const BathModel& bath,
                          double theta, double tau);

SEClassification classify(const XState& x0, const BathModel& bath, double theta, double tau);

} // namespace sedeph
