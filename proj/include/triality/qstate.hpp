// qstate.hpp
// Two-qubit state containers and basic algebra.
//
// Basis order is |00>, |01>, |10>, |11> with qubit 1 the left tensor factor.
// Bloch convention for reduced states:
//   r_x = 2 Re rho_01,  r_y = -2 Im rho_01,  r_z = rho_00 - rho_11.

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "triality/error.hpp"

namespace triality {

using Complex = std::complex<double>;

// Tolerance tiers: data ingestion/validation vs analytic identity checks.
inline constexpr double kValidationTol = 1e-9;
inline constexpr double kNormTol = 1e-12;

struct PureState {
    Eigen::Vector4cd amplitudes;  // (a, b, c, d)
};

struct DensityMatrix {
    Eigen::Matrix4cd rho;
};

struct ReducedState {
    Eigen::Matrix2cd rho;
    Eigen::Vector3d bloch;
};

// Normalizes the amplitude vector. Throws ZeroVector for norm < 1e-14.
PureState make_pure(const Eigen::Vector4cd& amplitudes);

// |state><state|.
DensityMatrix to_density(const PureState& state);

// Checks Hermiticity, unit trace and positivity (all at kValidationTol).
// Eigenvalues in [-kValidationTol, 0) are clipped to zero and the matrix is
// renormalized; matrices that already pass untouched are returned unchanged.
DensityMatrix validate_density(const Eigen::Matrix4cd& entries);

// Reduced state of subsystem `keep` (1 or 2), with Bloch view.
ReducedState partial_trace(const DensityMatrix& rho, int keep);

// Tr rho^2, in [0.25, 1] for valid two-qubit states.
double purity(const DensityMatrix& rho);

}  // namespace triality
