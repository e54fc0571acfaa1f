#include "triality/interferometer.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include <Eigen/SVD>

#include "triality/localops.hpp"
#include "triality/measures.hpp"

namespace triality {

namespace {

// Probability that both particles exit through port 0:
// row = first row of (t1 (x) t2), p = row . rho . row^dag.
double port00_probability(const Eigen::Matrix4cd& rho,
                          const Eigen::RowVector2cd& row1,
                          const Eigen::RowVector2cd& row2) {
    Eigen::RowVector4cd row;
    row << row1(0) * row2(0), row1(0) * row2(1), row1(1) * row2(0),
        row1(1) * row2(1);
    return (row * rho * row.adjoint())(0, 0).real();
}

double port0_probability(const Eigen::Matrix2cd& reduced,
                         const Eigen::RowVector2cd& row) {
    return (row * reduced * row.adjoint())(0, 0).real();
}

std::string sig12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

TransducerFamily symmetric_family() {
    return [](double phi) { return transducer_symmetric(phi); };
}

std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> schmidt_rotations(
    const PureState& state) {
    Eigen::Matrix2cd m;
    m << state.amplitudes(0), state.amplitudes(1),
         state.amplitudes(2), state.amplitudes(3);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(
        m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    // u1 m u2^T = Sigma, the real nonnegative Schmidt diagonal. The factors
    // are unitary but not special; their overall phases drop out of every
    // probability downstream.
    return {svd.matrixU().adjoint(), svd.matrixV().transpose()};
}

std::pair<TransducerFamily, TransducerFamily> schmidt_aligned_family(
    const PureState& state) {
    const auto [u1, u2] = schmidt_rotations(state);
    return {[u1](double phi) { return Eigen::Matrix2cd(transducer_symmetric(phi) * u1); },
            [u2](double phi) { return Eigen::Matrix2cd(transducer_symmetric(phi) * u2); }};
}

FringeData simulate_fringes(const DensityMatrix& rho,
                            const TransducerFamily& t1,
                            const TransducerFamily& t2, int grid_n) {
    if (grid_n < 8) {
        throw Error(ErrorCode::DomainError,
                    "grid_n must be >= 8, got " + std::to_string(grid_n));
    }
    const int n = grid_n;
    FringeData f;
    f.phases.resize(n);
    f.joint.resize(n, n);
    f.marginal1.resize(n);
    f.marginal2.resize(n);

    std::vector<Eigen::RowVector2cd> rows1(n), rows2(n);
    for (int i = 0; i < n; ++i) {
        f.phases[i] = 2.0 * std::numbers::pi * i / n;
        rows1[i] = t1(f.phases[i]).row(0);
        rows2[i] = t2(f.phases[i]).row(0);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            f.joint(i, j) = port00_probability(rho.rho, rows1[i], rows2[j]);
        }
    }
    const Eigen::Matrix2cd r1 = partial_trace(rho, 1).rho;
    const Eigen::Matrix2cd r2 = partial_trace(rho, 2).rho;
    for (int i = 0; i < n; ++i) {
        f.marginal1(i) = port0_probability(r1, rows1[i]);
        f.marginal2(i) = port0_probability(r2, rows2[i]);
    }
    f.v1 = visibility_from_fringes({f.marginal1.data(), size_t(n)});
    f.v2 = visibility_from_fringes({f.marginal2.data(), size_t(n)});
    f.v12 = corrected_two_particle_visibility(f);
    return f;
}

double visibility_from_fringes(std::span<const double> pattern) {
    if (pattern.size() < 8) {
        throw Error(ErrorCode::EmptyPattern,
                    "need at least 8 samples over a full period, got " +
                        std::to_string(pattern.size()));
    }
    double max = pattern[0];
    double min = pattern[0];
    for (const double v : pattern) {
        max = std::max(max, v);
        min = std::min(min, v);
    }
    const double sum = max + min;
    if (sum == 0.0) {
        return 0.0;
    }
    return (max - min) / sum;
}

double corrected_two_particle_visibility(const FringeData& f) {
    const int n = int(f.phases.size());
    if (n < 8 || f.joint.rows() != n || f.marginal1.size() != n ||
        f.marginal2.size() != n) {
        throw Error(ErrorCode::EmptyPattern, "fringe data incomplete");
    }
    std::vector<double> diagonal(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double corrected =
                f.joint(i, j) - f.marginal1(i) * f.marginal2(j) + 0.25;
            if (corrected < -1e-9) {
                throw Error(ErrorCode::NegativeCorrected,
                            "corrected probability " + std::to_string(corrected) +
                                " at grid (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
            }
            if (i == j) {
                diagonal[size_t(i)] = corrected;
            }
        }
    }
    return visibility_from_fringes(diagonal);
}

std::array<double, 2> verify_triality_interferometric(const PureState& state,
                                                      int grid_n) {
    if (grid_n < 64) {
        throw Error(ErrorCode::DomainError,
                    "grid_n must be >= 64, got " + std::to_string(grid_n));
    }
    const auto [u1, u2] = schmidt_rotations(state);
    const auto [t1, t2] = schmidt_aligned_family(state);
    const DensityMatrix rho = to_density(state);
    const FringeData f = simulate_fringes(rho, t1, t2, grid_n);

    const DensityMatrix rotated = apply_local(LocalUnitary{u1, u2}, rho);
    const double p1 = local_quantities(rotated, 1).p;
    const double p2 = local_quantities(rotated, 2).p;
    return {1.0 - (f.v12 * f.v12 + f.v1 * f.v1 + p1 * p1),
            1.0 - (f.v12 * f.v12 + f.v2 * f.v2 + p2 * p2)};
}

void write_fringe_csv(const FringeData& f, std::ostream& out) {
    out << "phi1,phi2,p12,p1,p2\n";
    const int n = int(f.phases.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out << sig12(f.phases[size_t(i)]) << ',' << sig12(f.phases[size_t(j)])
                << ',' << sig12(f.joint(i, j)) << ',' << sig12(f.marginal1(i))
                << ',' << sig12(f.marginal2(j)) << '\n';
        }
    }
}

}  // namespace triality
