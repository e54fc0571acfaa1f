// measures.hpp
// Scalar complementarity quantities for two-qubit states: concurrence,
// visibility, predictability, single-partite measure, entanglement of
// formation, distinguishability, erasure coherence, Bell bound, and the
// residuals of the triality relation C^2 + V_k^2 + P_k^2 = 1.

#pragma once

#include <optional>

#include "triality/qstate.hpp"

namespace triality {

struct ComplementarityReport {
    double concurrence = 0.0;
    double v1 = 0.0, v2 = 0.0;
    double p1 = 0.0, p2 = 0.0;
    double s1 = 0.0, s2 = 0.0;
    double eof = 0.0;
    double d1 = 0.0, d2 = 0.0;
    double c1 = 0.0, c2 = 0.0;
    std::optional<double> bell;  // populated for pure states only
    double triality_residual_1 = 0.0;
    double triality_residual_2 = 0.0;
    bool pure = false;
    // For mixed inputs D_k and c_k are computed from the pure-state
    // identities applied to (C, V_k, P_k) rather than operationally.
    bool derived_identity_defined = false;
};

// (sigma_y (x) sigma_y) |conj(state)>: amplitudes (-d*, c*, b*, -a*).
// Applying it twice returns the original amplitudes exactly.
PureState spin_flip(const PureState& state);

// 2 |ad - bc|; equals |<state|spin_flip(state)>|.
double concurrence_pure(const PureState& state);

// Wootters concurrence max(0, l1 - l2 - l3 - l4). The l_i are computed as
// singular values of sqrt(rho) (sigma_y (x) sigma_y) conj(sqrt(rho)), which
// carries the same values as the textbook eigenvalue product but stays
// accurate for rank-deficient input.
double concurrence_mixed(const DensityMatrix& rho);

struct LocalQuantities {
    double v;  // 2 |(rho_k)_01|
    double p;  // |(rho_k)_00 - (rho_k)_11|
    double s;  // sqrt(v^2 + p^2), the reduced Bloch norm
};

LocalQuantities local_quantities(const DensityMatrix& rho, int k);

// -x log2 x - (1-x) log2(1-x) with 0 log 0 = 0. Throws DomainError
// outside [0, 1].
double binary_entropy(double x);

// E = h((1 + sqrt(1 - C^2)) / 2). Throws DomainError outside [0, 1].
double entanglement_of_formation(double concurrence);

struct DerivedQuantities {
    double d;  // distinguishability sqrt(C^2 + P^2)
    double c;  // erasure coherence   sqrt(C^2 + V^2)
};

// Requires C^2 + V^2 + P^2 <= 1 (validation slack 1e-9); throws
// InconsistentInputs otherwise.
DerivedQuantities derived_quantities(double concurrence, double v, double p);

// sqrt(c^2 - V^2); throws InconsistentInputs unless it agrees with
// sqrt(D^2 - P^2) within 1e-9.
double concurrence_from_observables(double c, double v, double d, double p);

// 1 - (C^2 + V_k^2 + P_k^2); ~0 for pure states, >= 0 for every valid state.
double triality_residual(const DensityMatrix& rho, int k);

ComplementarityReport full_report(const DensityMatrix& rho);

}  // namespace triality
