// fock_oracle.cpp - Exact truncated-Fock evolution and partial-transpose probes

#include "sedeph/fock_oracle.hpp"

#include <cmath>
#include <sstream>

#include "sedeph/errors.hpp"

namespace sedeph {

namespace {

// sigma_z eigenvalues of qubit A and B for system index 0..3 (|00>,|01>,|10>,|11>).
constexpr int kSignA[4] = {+1, +1, -1, -1};
constexpr int kSignB[4] = {+1, -1, +1, -1};

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// exp(-i tau (w a^dag a + s g (a^dag + a))) in an n-level truncation.
Eigen::MatrixXcd conditional_propagator(const Mode& mode, int sign, int n, double tau) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    const double g = sign * std::sqrt(mode.g2);
    for (int k = 0; k < n; ++k) {
        h(k, k) = mode.omega * k;
        if (k + 1 < n) {
            h(k, k + 1) = g * std::sqrt(static_cast<double>(k + 1));
            h(k + 1, k) = h(k, k + 1);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::MatrixXcd vecs = es.eigenvectors().cast<cplx>();
    Eigen::VectorXcd phases(n);
    for (int k = 0; k < n; ++k) phases(k) = std::polar(1.0, -tau * es.eigenvalues()(k));
    Eigen::MatrixXcd u = vecs * phases.asDiagonal() * vecs.adjoint();
    const double defect = (u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (defect > 1e-12) throw InternalError("mode propagator failed the unitarity check");
    return u;
}

DenseHermitian hermitian(Eigen::MatrixXcd m) {
    m = 0.5 * (m + m.adjoint()).eval();
    return DenseHermitian(std::move(m));
}

// Partial transpose of the second factor, applied in place to a dimA x dimB
// operator, followed by the smallest eigenvalue.
double min_eig_pt(const Eigen::MatrixXcd& m, Eigen::Index dim_a, Eigen::Index dim_b) {
    return partial_transpose(hermitian(m), dim_a, dim_b).min_eigenvalue();
}

} // namespace

Eigen::Index OracleConfig::env_dim() const {
    Eigen::Index d = 1;
    for (std::size_t k = 0; k < modes.size(); ++k) d *= n_fock;
    return d;
}

void OracleConfig::validate() const {
    if (modes.empty()) throw RangeError("oracle needs at least one mode");
    if (n_fock < 2) throw RangeError("n_fock must be at least 2");
    if (!(theta > 0.0)) throw RangeError("theta must be positive");
    for (const auto& m : modes) {
        if (!(m.omega > 0.0) || !(m.g2 >= 0.0)) throw RangeError("invalid oracle mode");
        // (nbar / (nbar + 1))^n = exp(-n w / theta)
        if (-n_fock * m.omega / theta >= std::log(kThermalTail)) {
            std::ostringstream os;
            os << "n_fock = " << n_fock << " truncates more than " << kThermalTail
               << " thermal weight for omega = " << m.omega << ", theta = " << theta;
            throw TruncationError(os.str());
        }
    }
    // Overflow-free budget check.
    Eigen::Index d = 4;
    for (std::size_t k = 0; k < modes.size(); ++k) {
        d *= n_fock;
        if (d > max_dim) {
            throw DimensionError("oracle dimension exceeds the configured budget");
        }
    }
}

Eigen::MatrixXcd thermal_mode_state(double omega, double theta, int n_fock) {
    if (!(omega > 0.0) || !(theta > 0.0) || n_fock < 2) {
        throw RangeError("thermal_mode_state needs omega > 0, theta > 0, n_fock >= 2");
    }
    const double ratio_log = -omega / theta;
    if (n_fock * ratio_log >= std::log(kThermalTail)) {
        throw TruncationError("truncation discards too much thermal weight");
    }
    Eigen::VectorXd w(n_fock);
    for (int k = 0; k < n_fock; ++k) w(k) = std::exp(k * ratio_log);
    w /= w.sum();
    return w.cast<cplx>().asDiagonal();
}

TotalState::TotalState(std::array<std::array<Eigen::MatrixXcd, 4>, 4> blocks, int n_fock,
                       int mode_count)
    : blocks_(std::move(blocks)), n_fock_(n_fock), mode_count_(mode_count) {}

double TotalState::trace() const {
    double t = 0.0;
    for (int i = 0; i < 4; ++i) t += blocks_[i][i].trace().real();
    return t;
}

DenseHermitian TotalState::full() const {
    const Eigen::Index d = env_dim();
    Eigen::MatrixXcd m(4 * d, 4 * d);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.block(i * d, j * d, d, d) = blocks_[i][j];
    return hermitian(std::move(m));
}

TotalState evolve_total(const OracleConfig& cfg, double tau) {
    cfg.validate();
    const int n = cfg.n_fock;

    // Per-mode conditional evolutions of the thermal state, indexed by the
    // qubit-A branch pair (s, s').
    std::array<std::array<Eigen::MatrixXcd, 2>, 2> env;
    bool first = true;
    for (const auto& mode : cfg.modes) {
        const Eigen::MatrixXcd rho = thermal_mode_state(mode.omega, cfg.theta, n);
        const Eigen::MatrixXcd u_plus = conditional_propagator(mode, +1, n, tau);
        const Eigen::MatrixXcd u_minus = conditional_propagator(mode, -1, n, tau);
        const Eigen::MatrixXcd* u[2] = {&u_plus, &u_minus};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Eigen::MatrixXcd piece = (*u[a]) * rho * u[b]->adjoint();
                env[a][b] = first ? piece : kron(env[a][b], piece);
            }
        first = false;
    }

    const Eigen::Matrix4cd x = cfg.x0.matrix();
    std::array<std::array<Eigen::MatrixXcd, 4>, 4> blocks;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double energy_i = 0.5 * (cfg.split.omega_a * kSignA[i] + cfg.split.omega_b * kSignB[i]);
            const double energy_j = 0.5 * (cfg.split.omega_a * kSignA[j] + cfg.split.omega_b * kSignB[j]);
            const cplx coeff = x(i, j) * std::polar(1.0, -(energy_i - energy_j) * tau);
            const int a = kSignA[i] > 0 ? 0 : 1;
            const int b = kSignA[j] > 0 ? 0 : 1;
            blocks[i][j] = coeff * env[a][b];
        }
    }
    return TotalState(std::move(blocks), n, static_cast<int>(cfg.modes.size()));
}

DenseHermitian reduced_from_total(const TotalState& state) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = state.block(i, j).trace();
    return hermitian(m);
}

double pt_min_eig(const TotalState& state, Cut cut) {
    const Eigen::Index d = state.env_dim();
    switch (cut) {
    case Cut::SystemVsEnv: return min_eig_pt(state.full().matrix(), 4, d);
    case Cut::AVsEnv:
    case Cut::BVsEnv: {
        // Two-level system left after tracing out the other qubit.
        Eigen::MatrixXcd m(2 * d, 2 * d);
        for (int p = 0; p < 2; ++p) {
            for (int q = 0; q < 2; ++q) {
                Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
                for (int traced = 0; traced < 2; ++traced) {
                    const int i = cut == Cut::AVsEnv ? 2 * p + traced : 2 * traced + p;
                    const int j = cut == Cut::AVsEnv ? 2 * q + traced : 2 * traced + q;
                    acc += state.block(i, j);
                }
                m.block(p * d, q * d, d, d) = acc;
            }
        }
        return min_eig_pt(m, 2, d);
    }
    }
    throw InternalError("unknown cut");
}

double env_pair_check(const TotalState& state, std::array<int, 2> mode_pair) {
    const int count = state.mode_count();
    const int n = state.n_fock();
    if (count < 2 || mode_pair[0] == mode_pair[1] || mode_pair[0] < 0 || mode_pair[1] < 0 ||
        mode_pair[0] >= count || mode_pair[1] >= count) {
        throw DimensionError("env_pair_check needs two distinct valid mode indices");
    }
    Eigen::MatrixXcd env = Eigen::MatrixXcd::Zero(state.env_dim(), state.env_dim());
    for (int i = 0; i < 4; ++i) env += state.block(i, i);

    // Digit k of an environment index, mode 0 most significant.
    auto digit = [&](Eigen::Index idx, int k) {
        for (int r = count - 1; r > k; --r) idx /= n;
        return static_cast<int>(idx % n);
    };
    const int m1 = mode_pair[0], m2 = mode_pair[1];
    Eigen::MatrixXcd pair = Eigen::MatrixXcd::Zero(n * n, n * n);
    for (Eigen::Index r = 0; r < env.rows(); ++r) {
        for (Eigen::Index c = 0; c < env.cols(); ++c) {
            bool traced_match = true;
            for (int k = 0; k < count && traced_match; ++k) {
                if (k != m1 && k != m2 && digit(r, k) != digit(c, k)) traced_match = false;
            }
            if (!traced_match) continue;
            pair(digit(r, m1) * n + digit(r, m2), digit(c, m1) * n + digit(c, m2)) += env(r, c);
        }
    }
    return min_eig_pt(pair, n, n);
}

std::vector<OracleComparison> oracle_check(const OracleConfig& cfg, std::span<const double> taus) {
    cfg.validate();
    const BathModel bath = BathModel::discrete(cfg.modes);
    const CriteriaThresholds thresholds = CriteriaThresholds::from_state(cfg.x0);
    std::vector<OracleComparison> out;
    out.reserve(taus.size());
    for (double tau : taus) {
        const TotalState total = evolve_total(cfg, tau);
        const DenseHermitian oracle = reduced_from_total(total);
        const DenseHermitian analytic = reduced_state(cfg.x0, bath, cfg.theta, tau, cfg.split);
        OracleComparison row{};
        row.tau = tau;
        row.max_reduced_diff = (oracle.matrix() - analytic.matrix()).cwiseAbs().maxCoeff();
        row.coherence14_oracle = std::abs(oracle(0, 3));
        row.coherence14_analytic = std::abs(analytic(0, 3));
        row.coherence23_oracle = std::abs(oracle(1, 2));
        row.coherence23_analytic = std::abs(analytic(1, 2));
        row.pt_system_env = pt_min_eig(total, Cut::SystemVsEnv);
        row.pt_a_env = pt_min_eig(total, Cut::AVsEnv);
        row.pt_b_env = pt_min_eig(total, Cut::BVsEnv);
        if (total.mode_count() >= 2) row.pt_env_pair = env_pair_check(total, {0, 1});
        row.criteria_verdict = classify(thresholds, bath, cfg.theta, tau).verdict;
        row.peres_consistent = row.criteria_verdict != Verdict::Entangled || row.pt_system_env < 0.0;
        out.push_back(row);
    }
    return out;
}

} // namespace sedeph
