// localops.hpp
// Local unitary transformations and visibility maximization.

#pragma once

#include <Eigen/Dense>

#include "triality/qstate.hpp"

namespace triality {

// Pair of single-qubit special unitaries acting as u1 (x) u2.
struct LocalUnitary {
    Eigen::Matrix2cd u1;
    Eigen::Matrix2cd u2;

    static LocalUnitary identity() {
        return {Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Identity()};
    }
};

// Z-Y-Z Euler form Rz(alpha) Ry(beta) Rz(gamma) with
// Rz(t) = diag(e^{-it/2}, e^{it/2}) and Ry(t) the real rotation by t.
Eigen::Matrix2cd su2_from_angles(double alpha, double beta, double gamma);

// Kronecker product of two single-qubit operators in this basis order.
Eigen::Matrix4cd kron(const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y);

// (u1 (x) u2) rho (u1 (x) u2)^dag.
DensityMatrix apply_local(const LocalUnitary& u, const DensityMatrix& rho);

struct VisibilityMax {
    double v_max;
    LocalUnitary unitary;  // acts on subsystem k, identity on the other
};

// Closed-form maximum of V_k over local unitaries: rotate the reduced Bloch
// vector into the equatorial plane. The achieved value equals S_k.
VisibilityMax maximize_visibility(const DensityMatrix& rho, int k);

// Phase shifter phi on the first port followed by a symmetric 50/50 beam
// splitter; every entry has magnitude 1/sqrt(2).
Eigen::Matrix2cd transducer_symmetric(double phase);

}  // namespace triality
