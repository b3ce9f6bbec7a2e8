// dilation.cpp - Entangling and separable dilations of qubit dephasing

#include "sedeph/dilation.hpp"

#include <cmath>

#include "sedeph/errors.hpp"

namespace sedeph {

namespace {

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw RangeError("dephasing parameter p must lie in [0, 1]");
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

Eigen::Matrix2cd projector(int k) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(k, k) = 1.0;
    return m;
}

Eigen::Matrix2cd sigma_z() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

Eigen::Matrix2cd sigma_x() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

} // namespace

Qubit Qubit::make(double rho00, double rho11, cplx rho01) {
    if (rho00 < -kStateTol || rho11 < -kStateTol) throw NegativityError("negative qubit population");
    if (std::abs(rho00 + rho11 - 1.0) > kStateTol) throw TraceError("qubit trace differs from 1");
    if (rho00 * rho11 - std::norm(rho01) < -kStateTol) {
        throw NegativityError("qubit state not positive: rho00*rho11 < |rho01|^2");
    }
    return Qubit(rho00, rho11, rho01);
}

Eigen::Matrix2cd Qubit::matrix() const {
    Eigen::Matrix2cd m;
    m << rho00_, rho01_, std::conj(rho01_), rho11_;
    return m;
}

Qubit dephase_channel(const Qubit& q, double p) {
    check_p(p);
    return Qubit::make(q.rho00(), q.rho11(), std::sqrt(p) * q.rho01());
}

DenseHermitian pure_dilation_total(const Qubit& q, double p) {
    check_p(p);
    const Eigen::Matrix2cd env_unitary = std::sqrt(p) * sigma_z() + std::sqrt(1.0 - p) * sigma_x();
    const Eigen::Matrix4cd u = kron(projector(0), Eigen::Matrix2cd::Identity()) +
                               kron(projector(1), env_unitary);
    const Eigen::Matrix4cd initial = kron(q.matrix(), projector(0));
    Eigen::Matrix4cd out = u * initial * u.adjoint();
    out = 0.5 * (out + out.adjoint()).eval();
    return DenseHermitian(out);
}

DenseHermitian mixed_dilation_total(const Qubit& q, double p) {
    check_p(p);
    const double root = std::sqrt(p);
    const Eigen::Matrix2cd flipped = sigma_z() * q.matrix() * sigma_z();
    return DenseHermitian(0.5 * (1.0 + root) * kron(q.matrix(), projector(0)) +
                          0.5 * (1.0 - root) * kron(flipped, projector(1)));
}

Qubit reduce_to_system(const DenseHermitian& total) {
    if (total.dim() != 4) throw DimensionError("expected a qubit (x) qubit operator");
    const auto& m = total.matrix();
    return Qubit::make((m(0, 0) + m(1, 1)).real(), (m(2, 2) + m(3, 3)).real(), m(0, 2) + m(1, 3));
}

double pure_dilation_pt_determinant(const Qubit& q, double p) {
    check_p(p);
    return -(1.0 - p) * (1.0 - p) * q.rho00() * q.rho11() * std::norm(q.rho01());
}

} // namespace sedeph
