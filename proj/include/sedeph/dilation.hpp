// dilation.hpp - Single-qubit dephasing channel and two of its qubit dilations
//
// Tensor order is system (x) environment, environment qubit second.

#pragma once

#include "sedeph/xstate.hpp"

namespace sedeph {

class Qubit {
public:
    // Throws TraceError / NegativityError.
    static Qubit make(double rho00, double rho11, cplx rho01);

    double rho00() const { return rho00_; }
    double rho11() const { return rho11_; }
    cplx rho01() const { return rho01_; }

    Eigen::Matrix2cd matrix() const;

private:
    Qubit(double a, double d, cplx b) : rho00_(a), rho11_(d), rho01_(b) {}
    double rho00_, rho11_;
    cplx rho01_;
};

// rho01 -> sqrt(p) rho01. Throws RangeError unless p in [0, 1].
Qubit dephase_channel(const Qubit& q, double p);

// U (q (x) |0><0|) U^dag with U = |0><0| (x) 1 + |1><1| (x) (sqrt(p) sz + sqrt(1-p) sx).
DenseHermitian pure_dilation_total(const Qubit& q, double p);

// (1+sqrt p)/2 q (x) |0><0| + (1-sqrt p)/2 sz q sz (x) |1><1|.
DenseHermitian mixed_dilation_total(const Qubit& q, double p);

// Traces out the environment qubit.
Qubit reduce_to_system(const DenseHermitian& total);

// Closed-form determinant of the pure dilation's partial transpose.
double pure_dilation_pt_determinant(const Qubit& q, double p);

} // namespace sedeph
