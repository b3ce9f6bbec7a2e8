// xstate.cpp - X-state validation, concurrence, and blockwise eigensolver

#include "sedeph/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sedeph/errors.hpp"

namespace sedeph {

XState XState::make(double rho11, double rho22, double rho33, double rho44,
                    cplx rho14, cplx rho23) {
    const double pops[4] = {rho11, rho22, rho33, rho44};
    for (int i = 0; i < 4; ++i) {
        if (!std::isfinite(pops[i]) || pops[i] < -kStateTol) {
            std::ostringstream os;
            os << "population rho" << (i + 1) << (i + 1) << " = " << pops[i] << " is negative";
            throw NegativityError(os.str());
        }
    }
    if (!std::isfinite(rho14.real()) || !std::isfinite(rho14.imag()) ||
        !std::isfinite(rho23.real()) || !std::isfinite(rho23.imag())) {
        throw NegativityError("coherences must be finite");
    }
    const double tr = rho11 + rho22 + rho33 + rho44;
    if (std::abs(tr - 1.0) > kStateTol) {
        std::ostringstream os;
        os.precision(17);
        os << "trace " << tr << " differs from 1";
        throw TraceError(os.str());
    }
    if (rho11 * rho44 - std::norm(rho14) < -kStateTol) {
        throw NegativityError("block {1,4} not positive: rho11*rho44 < |rho14|^2");
    }
    if (rho22 * rho33 - std::norm(rho23) < -kStateTol) {
        throw NegativityError("block {2,3} not positive: rho22*rho33 < |rho23|^2");
    }
    return XState(rho11, rho22, rho33, rho44, rho14, rho23);
}

double XState::population(std::size_t i) const {
    switch (i) {
    case 0: return rho11_;
    case 1: return rho22_;
    case 2: return rho33_;
    default: return rho44_;
    }
}

Eigen::Matrix4cd XState::matrix() const {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = rho11_;
    m(1, 1) = rho22_;
    m(2, 2) = rho33_;
    m(3, 3) = rho44_;
    m(0, 3) = rho14_;
    m(3, 0) = std::conj(rho14_);
    m(1, 2) = rho23_;
    m(2, 1) = std::conj(rho23_);
    return m;
}

XState WernerParams::to_x_state() const {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw RangeError("Werner parameter c must lie in [0, 1]");
    }
    const double outer = (1.0 - c) / 4.0;
    const double inner = (1.0 + c) / 4.0;
    return XState::make(outer, inner, inner, outer, cplx{0.0, 0.0}, cplx{-c / 2.0, 0.0});
}

DenseHermitian::DenseHermitian(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw DimensionError("DenseHermitian requires a square matrix");
    }
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw InputError("matrix is not Hermitian");
    }
}

Eigen::VectorXd DenseHermitian::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double DenseHermitian::min_eigenvalue() const {
    return eigenvalues()(0);
}

double concurrence_x(const XState& x, double d) {
    const double a = std::abs(x.rho23()) * d - std::sqrt(x.rho11() * x.rho44());
    const double b = std::abs(x.rho14()) * d - std::sqrt(x.rho22() * x.rho33());
    return 2.0 * std::max({0.0, a, b});
}

XState transpose_x(const XState& x) {
    return XState::make(x.rho11(), x.rho22(), x.rho33(), x.rho44(),
                        std::conj(x.rho14()), std::conj(x.rho23()));
}

namespace {

struct BlockEig {
    double value;
    cplx first;
    cplx second;
};

// Lower eigenpair of [[a, b], [conj(b), d]].
BlockEig lower_eig_2x2(double a, double d, cplx b) {
    const double mean = 0.5 * (a + d);
    const double half = 0.5 * (a - d);
    const double radius = std::hypot(half, std::abs(b));
    const double lambda = mean - radius;
    if (std::abs(b) == 0.0) {
        // Diagonal block; degenerate case falls back to the lower index.
        if (d < a) return {lambda, 0.0, 1.0};
        return {lambda, 1.0, 0.0};
    }
    // Two algebraically equivalent candidates; keep the better conditioned one.
    cplx v1 = b, v2 = lambda - a;
    cplx w1 = lambda - d, w2 = std::conj(b);
    if (std::norm(w1) + std::norm(w2) > std::norm(v1) + std::norm(v2)) {
        v1 = w1;
        v2 = w2;
    }
    const double n = std::sqrt(std::norm(v1) + std::norm(v2));
    return {lambda, v1 / n, v2 / n};
}

} // namespace

EigPair min_eigpair_x(const XState& x) {
    const BlockEig outer = lower_eig_2x2(x.rho11(), x.rho44(), x.rho14());
    const BlockEig inner = lower_eig_2x2(x.rho22(), x.rho33(), x.rho23());

    EigPair out;
    out.vector.setZero();
    if (inner.value <= outer.value + 1e-14) {
        out.value = inner.value;
        out.vector(1) = inner.first;
        out.vector(2) = inner.second;
    } else {
        out.value = outer.value;
        out.vector(0) = outer.first;
        out.vector(3) = outer.second;
    }
    for (int i = 0; i < 4; ++i) {
        const double mag = std::abs(out.vector(i));
        if (mag > 1e-15) {
            const cplx phase = std::conj(out.vector(i)) / mag;
            out.vector *= phase;
            break;
        }
    }
    return out;
}

DenseHermitian partial_transpose(const DenseHermitian& m, Eigen::Index dimA, Eigen::Index dimB) {
    if (dimA <= 0 || dimB <= 0 || m.dim() != dimA * dimB) {
        throw DimensionError("partial_transpose: dimension mismatch");
    }
    const Eigen::MatrixXcd& src = m.matrix();
    Eigen::MatrixXcd out(src.rows(), src.cols());
    for (Eigen::Index ia = 0; ia < dimA; ++ia)
        for (Eigen::Index ib = 0; ib < dimB; ++ib)
            for (Eigen::Index ja = 0; ja < dimA; ++ja)
                for (Eigen::Index jb = 0; jb < dimB; ++jb)
                    out(ia * dimB + ib, ja * dimB + jb) = src(ia * dimB + jb, ja * dimB + ib);
    return DenseHermitian(std::move(out));
}

} // namespace sedeph
