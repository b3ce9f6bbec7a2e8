// xstate.hpp - Two-qubit X states, concurrence, and small dense Hermitian helpers

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace sedeph {

using cplx = std::complex<double>;

// Absolute tolerance for trace and positivity checks on O(1) inputs.
inline constexpr double kStateTol = 1e-12;

// A two-qubit density matrix with support only on the diagonal and the
// anti-diagonal, in the basis |00>, |01>, |10>, |11> (indices 1..4).
// Instances are always valid: construction goes through make().
class XState {
public:
    // Throws TraceError or NegativityError.
    static XState make(double rho11, double rho22, double rho33, double rho44,
                       cplx rho14, cplx rho23);

    double rho11() const { return rho11_; }
    double rho22() const { return rho22_; }
    double rho33() const { return rho33_; }
    double rho44() const { return rho44_; }
    cplx rho14() const { return rho14_; }
    cplx rho23() const { return rho23_; }

    // Diagonal entry i in 0..3.
    double population(std::size_t i) const;

    Eigen::Matrix4cd matrix() const;

private:
    XState(double r11, double r22, double r33, double r44, cplx r14, cplx r23)
        : rho11_(r11), rho22_(r22), rho33_(r33), rho44_(r44), rho14_(r14), rho23_(r23) {}

    double rho11_, rho22_, rho33_, rho44_;
    cplx rho14_, rho23_;
};

// (1-c)/4 * identity + c |phi-><phi-| with |phi-> = (|01> - |10>)/sqrt(2).
struct WernerParams {
    double c{0.0};

    XState to_x_state() const;
};

// A Hermitian matrix of arbitrary dimension. The constructor rejects
// non-Hermitian input (tolerance scaled by the largest entry).
class DenseHermitian {
public:
    explicit DenseHermitian(Eigen::MatrixXcd m);

    Eigen::Index dim() const { return m_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return m_; }
    cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    double trace() const { return m_.trace().real(); }
    Eigen::VectorXd eigenvalues() const;
    double min_eigenvalue() const;

private:
    Eigen::MatrixXcd m_;
};

// 2 max{0, |rho23| d - sqrt(rho11 rho44), |rho14| d - sqrt(rho22 rho33)}.
double concurrence_x(const XState& x, double d);

// Matrix transpose: coherences conjugated, populations untouched.
XState transpose_x(const XState& x);

struct EigPair {
    double value{0.0};
    Eigen::Vector4cd vector;
};

// Smallest eigenvalue and a unit eigenvector, solved blockwise on {1,4} and
// {2,3}. Ties go to the {2,3} block, then to the lower basis index. The first
// nonzero amplitude of the returned vector is real and positive.
EigPair min_eigpair_x(const XState& x);

// Transposes the indices of the second factor of a dimA x dimB bipartite
// operator. Throws DimensionError when dim != dimA * dimB.
DenseHermitian partial_transpose(const DenseHermitian& m, Eigen::Index dimA, Eigen::Index dimB);

} // namespace sedeph
