#include "triality/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace triality {

namespace {

// sigma_y (x) sigma_y = antidiag(-1, 1, 1, -1), a real matrix.
const Eigen::Matrix4d& spin_flip_matrix() {
    static const Eigen::Matrix4d m = [] {
        Eigen::Matrix4d y = Eigen::Matrix4d::Zero();
        y(0, 3) = -1.0;
        y(1, 2) = 1.0;
        y(2, 1) = 1.0;
        y(3, 0) = -1.0;
        return y;
    }();
    return m;
}

Eigen::Matrix4cd matrix_sqrt_psd(const Eigen::Matrix4cd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
    Eigen::Vector4d evals = es.eigenvalues();
    for (int i = 0; i < 4; ++i) {
        evals(i) = evals(i) < 1e-12 ? 0.0 : std::sqrt(evals(i));
    }
    return es.eigenvectors() * evals.asDiagonal() * es.eigenvectors().adjoint();
}

double clamp01(double x) {
    return std::min(1.0, std::max(0.0, x));
}

}  // namespace

PureState spin_flip(const PureState& state) {
    const Eigen::Vector4cd& a = state.amplitudes;
    Eigen::Vector4cd flipped;
    flipped << -std::conj(a(3)), std::conj(a(2)), std::conj(a(1)),
        -std::conj(a(0));
    return PureState{flipped};
}

double concurrence_pure(const PureState& state) {
    const Eigen::Vector4cd& a = state.amplitudes;
    return 2.0 * std::abs(a(0) * a(3) - a(1) * a(2));
}

double concurrence_mixed(const DensityMatrix& rho) {
    const Eigen::Matrix4cd herm = 0.5 * (rho.rho + rho.rho.adjoint());
    const Eigen::Matrix4cd sq = matrix_sqrt_psd(herm);
    const Eigen::Matrix4cd k = sq * spin_flip_matrix() * sq.conjugate();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(k);
    const Eigen::Vector4d l = svd.singularValues();  // sorted descending
    return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

LocalQuantities local_quantities(const DensityMatrix& rho, int k) {
    const ReducedState reduced = partial_trace(rho, k);
    const double v = 2.0 * std::abs(reduced.rho(0, 1));
    const double p = std::abs((reduced.rho(0, 0) - reduced.rho(1, 1)).real());
    return LocalQuantities{v, p, std::hypot(v, p)};
}

double binary_entropy(double x) {
    if (x < -1e-12 || x > 1.0 + 1e-12) {
        throw Error(ErrorCode::DomainError,
                    "binary entropy argument outside [0, 1]: " +
                        std::to_string(x));
    }
    x = clamp01(x);
    if (x == 0.0 || x == 1.0) {
        return 0.0;
    }
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entanglement_of_formation(double concurrence) {
    if (concurrence < -1e-12 || concurrence > 1.0 + 1e-12) {
        throw Error(ErrorCode::DomainError,
                    "concurrence outside [0, 1]: " + std::to_string(concurrence));
    }
    const double c = clamp01(concurrence);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

DerivedQuantities derived_quantities(double concurrence, double v, double p) {
    const auto in_unit = [](double x) { return x >= -1e-12 && x <= 1.0 + 1e-12; };
    if (!in_unit(concurrence) || !in_unit(v) || !in_unit(p)) {
        throw Error(ErrorCode::InconsistentInputs,
                    "C, V, P must lie in [0, 1]");
    }
    const double c = clamp01(concurrence);
    const double vv = clamp01(v);
    const double pp = clamp01(p);
    if (c * c + vv * vv + pp * pp > 1.0 + 1e-9) {
        throw Error(ErrorCode::InconsistentInputs,
                    "C^2 + V^2 + P^2 exceeds 1: " +
                        std::to_string(c * c + vv * vv + pp * pp));
    }
    return DerivedQuantities{std::min(1.0, std::hypot(c, pp)),
                             std::min(1.0, std::hypot(c, vv))};
}

double concurrence_from_observables(double c, double v, double d, double p) {
    if (c < v - 1e-12 || d < p - 1e-12) {
        throw Error(ErrorCode::InconsistentInputs,
                    "requires c >= V and D >= P");
    }
    const double from_c = std::sqrt(std::max(0.0, c * c - v * v));
    const double from_d = std::sqrt(std::max(0.0, d * d - p * p));
    if (std::abs(from_c - from_d) > 1e-9) {
        throw Error(ErrorCode::InconsistentInputs,
                    "sqrt(c^2 - V^2) and sqrt(D^2 - P^2) disagree: " +
                        std::to_string(from_c) + " vs " + std::to_string(from_d));
    }
    return from_c;
}

double triality_residual(const DensityMatrix& rho, int k) {
    const double c = concurrence_mixed(rho);
    const LocalQuantities lq = local_quantities(rho, k);
    return 1.0 - (c * c + lq.v * lq.v + lq.p * lq.p);
}

ComplementarityReport full_report(const DensityMatrix& rho) {
    ComplementarityReport report;
    report.pure = purity(rho) >= 1.0 - kValidationTol;
    report.concurrence = concurrence_mixed(rho);
    const LocalQuantities q1 = local_quantities(rho, 1);
    const LocalQuantities q2 = local_quantities(rho, 2);
    report.v1 = q1.v;
    report.p1 = q1.p;
    report.s1 = q1.s;
    report.v2 = q2.v;
    report.p2 = q2.p;
    report.s2 = q2.s;
    report.eof = entanglement_of_formation(std::min(1.0, report.concurrence));
    const DerivedQuantities d1 = derived_quantities(report.concurrence, q1.v, q1.p);
    const DerivedQuantities d2 = derived_quantities(report.concurrence, q2.v, q2.p);
    report.d1 = d1.d;
    report.c1 = d1.c;
    report.d2 = d2.d;
    report.c2 = d2.c;
    const double c2 = report.concurrence * report.concurrence;
    report.triality_residual_1 = 1.0 - (c2 + q1.v * q1.v + q1.p * q1.p);
    report.triality_residual_2 = 1.0 - (c2 + q2.v * q2.v + q2.p * q2.p);
    if (report.pure) {
        report.bell = 2.0 * std::sqrt(1.0 + c2);
    } else {
        report.derived_identity_defined = true;
    }
    return report;
}

}  // namespace triality
