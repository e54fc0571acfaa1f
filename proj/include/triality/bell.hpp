// bell.hpp
// CHSH correlation values, a deterministic brute-force maximizer, and the
// concurrence bound B = 2 sqrt(1 + C^2) for pure states.

#pragma once

#include <Eigen/Dense>

#include "triality/qstate.hpp"

namespace triality {

struct ChshSettings {
    Eigen::Vector3d a;
    Eigen::Vector3d a_prime;
    Eigen::Vector3d b;
    Eigen::Vector3d b_prime;
};

// T_ij = Tr[rho (sigma_i (x) sigma_j)], the 3x3 correlation matrix.
Eigen::Matrix3d correlation_matrix(const DensityMatrix& rho);

// E(a, b) = Tr[rho (a.sigma (x) b.sigma)]. Directions must be unit vectors
// (1e-12); throws DomainError otherwise.
double correlation(const DensityMatrix& rho, const Eigen::Vector3d& a,
                   const Eigen::Vector3d& b);

// E(a,b) + E(a,b') + E(a',b) - E(a',b').
double chsh_value(const DensityMatrix& rho, const ChshSettings& s);

// Deterministic maximization of the CHSH value over measurement settings:
// a coarse grid over the plane of the correlation matrix's two leading
// singular directions, a full-sphere coarse scan with the a-settings
// eliminated in closed form, then see-saw coordinate refinement.
double chsh_maximize(const DensityMatrix& rho, int grid_density = 12,
                     int refine_iters = 40);

// 2 sqrt(1 + C^2); cross-checked against 2 sqrt(2 - S_k^2) for both
// subsystems (throws InconsistentInputs beyond 1e-10, which cannot happen
// for normalized input).
double bell_bound_pure(const PureState& state);

}  // namespace triality
