#include "triality/qstate.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace triality {

PureState make_pure(const Eigen::Vector4cd& amplitudes) {
    const double norm = amplitudes.norm();
    if (norm < 1e-14) {
        throw Error(ErrorCode::ZeroVector, "amplitude vector has zero norm");
    }
    return PureState{amplitudes / norm};
}

DensityMatrix to_density(const PureState& state) {
    return DensityMatrix{state.amplitudes * state.amplitudes.adjoint()};
}

DensityMatrix validate_density(const Eigen::Matrix4cd& entries) {
    const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kValidationTol) {
        throw Error(ErrorCode::NotHermitian,
                    "max |rho_ij - conj(rho_ji)| = " + std::to_string(asym));
    }
    const double trace_err = std::abs(entries.trace() - Complex(1.0, 0.0));
    if (trace_err > kValidationTol) {
        throw Error(ErrorCode::BadTrace,
                    "|Tr rho - 1| = " + std::to_string(trace_err));
    }

    const Eigen::Matrix4cd herm = 0.5 * (entries + entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm);
    const Eigen::Vector4d evals = es.eigenvalues();
    if (evals.minCoeff() < -kValidationTol) {
        throw Error(ErrorCode::NotPositive,
                    "smallest eigenvalue = " + std::to_string(evals.minCoeff()));
    }
    if (evals.minCoeff() >= 0.0) {
        // Already a proper state; keep the caller's entries bit-for-bit.
        return DensityMatrix{entries};
    }
    const Eigen::Vector4d clipped = evals.cwiseMax(0.0);
    Eigen::Matrix4cd repaired = es.eigenvectors() *
                                clipped.asDiagonal() *
                                es.eigenvectors().adjoint();
    repaired /= repaired.trace().real();
    return DensityMatrix{repaired};
}

ReducedState partial_trace(const DensityMatrix& rho, int keep) {
    if (keep != 1 && keep != 2) {
        throw Error(ErrorCode::DomainError, "subsystem index must be 1 or 2");
    }
    Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
    const Eigen::Matrix4cd& m = rho.rho;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                r(i, j) += (keep == 1) ? m(2 * i + k, 2 * j + k)
                                       : m(2 * k + i, 2 * k + j);
            }
        }
    }
    const Eigen::Vector3d bloch(2.0 * r(0, 1).real(),
                                -2.0 * r(0, 1).imag(),
                                (r(0, 0) - r(1, 1)).real());
    return ReducedState{r, bloch};
}

double purity(const DensityMatrix& rho) {
    return (rho.rho * rho.rho).trace().real();
}

}  // namespace triality
