// criteria.cpp - Thresholds, optimal test vector, and three-valued classification

#include "sedeph/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sedeph/errors.hpp"

namespace sedeph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Overlap {
    double num;
    double den;
};

Overlap overlap_terms(const XState& x0, const TestVector& v) {
    const double num = x0.rho11() * std::norm(v.r) + x0.rho22() * std::norm(v.s) +
                       x0.rho33() * std::norm(v.t) + x0.rho44() * std::norm(v.u);
    const double den = 2.0 * std::real(x0.rho23() * v.s * std::conj(v.t)) +
                       2.0 * std::real(x0.rho14() * v.r * std::conj(v.u));
    return {num, den};
}

double branch_threshold(double partners, double coherence_sq) {
    if (coherence_sq == 0.0) return kInf;
    return 0.5 * std::log(partners / coherence_sq);
}

} // namespace

TestVector TestVector::make(cplx r, cplx s, cplx t, cplx u) {
    const double n = std::norm(r) + std::norm(s) + std::norm(t) + std::norm(u);
    if (std::abs(n - 1.0) > 1e-12) throw InputError("test vector must have unit norm");
    return {r, s, t, u};
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Separable: return "separable";
    case Verdict::Entangled: return "entangled";
    case Verdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

double separability_threshold(const XState& x0) {
    return std::min(branch_threshold(x0.rho22() * x0.rho33(), std::norm(x0.rho23())),
                    branch_threshold(x0.rho11() * x0.rho44(), std::norm(x0.rho14())));
}

TestVector optimal_test_vector(const XState& x0) {
    const EigPair p = min_eigpair_x(transpose_x(x0));
    return {p.vector(0), p.vector(1), p.vector(2), p.vector(3)};
}

double entanglement_threshold(const XState& x0, const TestVector& v) {
    const Overlap o = overlap_terms(x0, v);
    if (o.den >= 0.0) return kInf;
    return std::log(o.num / -o.den);
}

PtSign epsilon_pt_sign(const XState& x0, const TestVector& v, const BathModel& bath,
                       double theta, double tau) {
    const Overlap o = overlap_terms(x0, v);
    if (o.den >= 0.0) return PtSign::NonNegative;
    const KernelValue e = se_kernel(SEKernel::E, bath, theta, tau);
    // num + e^E den < 0  <=>  log(num) < log(-den) + E
    const double coherent = std::log(-o.den) + e.value;
    return std::log(o.num) < coherent ? PtSign::Negative : PtSign::NonNegative;
}

CriteriaThresholds CriteriaThresholds::from_state(const XState& x0) {
    return {separability_threshold(x0), entanglement_threshold(x0, optimal_test_vector(x0))};
}

SEClassification classify(const CriteriaThresholds& thresholds, const BathModel& bath,
                          double theta, double tau) {
    SEClassification out;
    out.s_threshold = thresholds.separability;
    out.e_threshold = thresholds.entanglement;
    out.s_value = se_kernel(SEKernel::S, bath, theta, tau);
    out.e_value = se_kernel(SEKernel::E, bath, theta, tau);
    // E = S - Sbar <= S; clip quadrature noise where Sbar is negligible.
    if (out.e_value.log_value > out.s_value.log_value) out.e_value = out.s_value;

    const bool separable = kernel_le(out.s_value, out.s_threshold);
    const bool entangled = kernel_gt(out.e_value, out.e_threshold);
    if (separable && entangled) {
        std::ostringstream os;
        os << "separability and entanglement criteria both hold at theta=" << theta
           << " tau=" << tau;
        throw InternalError(os.str());
    }
    out.verdict = separable ? Verdict::Separable
                            : (entangled ? Verdict::Entangled : Verdict::Undetermined);
    return out;
}

SEClassification classify(const XState& x0, const BathModel& bath, double theta, double tau) {
    return classify(CriteriaThresholds::from_state(x0), bath, theta, tau);
}

} // namespace sedeph
