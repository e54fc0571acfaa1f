// interferometer.hpp
// Two-particle fringe simulation and visibility extraction.
//
// Each arm applies a phase-dependent local unitary (a "transducer"); the
// recorded probabilities refer to the first output port of each arm. The
// corrected coincidence pattern P12 - P1 P2 + 1/4 carries the two-particle
// visibility, read along the phi1 + phi2 diagonal at phi1 - phi2 = 0.
//
// For states in Schmidt form a|00> + d|11> the plain symmetric transducers
// already give v12 equal to the concurrence. For a general pure state the
// identity is restored by composing the transducers with the local
// rotations from its Schmidt decomposition (schmidt_aligned_family).

#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "triality/qstate.hpp"

namespace triality {

using TransducerFamily = std::function<Eigen::Matrix2cd(double)>;

struct FringeData {
    std::vector<double> phases;       // n grid phases in [0, 2pi)
    Eigen::MatrixXd joint;            // P12(phi1, phi2); row index = phi1
    Eigen::VectorXd marginal1;        // P1(phi1)
    Eigen::VectorXd marginal2;        // P2(phi2)
    double v1 = 0.0;
    double v2 = 0.0;
    double v12 = 0.0;
};

// phi -> transducer_symmetric(phi).
TransducerFamily symmetric_family();

// Local rotations (u1, u2) such that (u1 (x) u2)|state> has amplitudes
// (s1, 0, 0, s2) with s1 >= s2 >= 0, the Schmidt form of the state.
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> schmidt_rotations(
    const PureState& state);

// phi -> transducer_symmetric(phi) * u_k with u_k from schmidt_rotations.
std::pair<TransducerFamily, TransducerFamily> schmidt_aligned_family(
    const PureState& state);

// Probabilities of the designated ports over an n x n phase grid, plus the
// extracted visibilities. grid_n must be >= 8.
FringeData simulate_fringes(const DensityMatrix& rho,
                            const TransducerFamily& t1,
                            const TransducerFamily& t2, int grid_n);

// (max - min) / (max + min); zero when the pattern is identically zero.
// Throws EmptyPattern for fewer than 8 samples.
double visibility_from_fringes(std::span<const double> pattern);

// Visibility of the corrected coincidence pattern along the diagonal.
// Throws NegativeCorrected if the corrected probability dips below -1e-9
// anywhere on the grid.
double corrected_two_particle_visibility(const FringeData& f);

// Residuals 1 - (v12^2 + v_k^2 + P_k^2) for k = 1, 2, with v12 and v_k
// simulated in the Schmidt frame and P_k computed analytically there.
// grid_n must be >= 64.
std::array<double, 2> verify_triality_interferometric(const PureState& state,
                                                      int grid_n);

// CSV columns phi1, phi2, p12, p1, p2 (12 significant digits, header row).
void write_fringe_csv(const FringeData& f, std::ostream& out);

}  // namespace triality
