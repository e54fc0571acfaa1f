#include "triality/bell.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "triality/localops.hpp"
#include "triality/measures.hpp"

namespace triality {

namespace {

const std::array<Eigen::Matrix2cd, 3>& pauli() {
    static const std::array<Eigen::Matrix2cd, 3> s = [] {
        std::array<Eigen::Matrix2cd, 3> p;
        const Complex i(0.0, 1.0);
        p[0] << 0, 1, 1, 0;
        p[1] << 0, -i, i, 0;
        p[2] << 1, 0, 0, -1;
        return p;
    }();
    return s;
}

void require_unit(const Eigen::Vector3d& v, const char* name) {
    if (std::abs(v.norm() - 1.0) > 1e-12) {
        throw Error(ErrorCode::DomainError,
                    std::string(name) + " must be a unit vector, |" + name +
                        "| = " + std::to_string(v.norm()));
    }
}

Eigen::Vector3d normalized_or(const Eigen::Vector3d& v,
                              const Eigen::Vector3d& fallback) {
    const double n = v.norm();
    return n < 1e-15 ? fallback : Eigen::Vector3d(v / n);
}

// CHSH value for fixed (b, b') after maximizing over a, a' in closed form:
// S = |T (b + b')| + |T (b - b')|.
double chsh_a_optimal(const Eigen::Matrix3d& t, const Eigen::Vector3d& b,
                      const Eigen::Vector3d& b_prime) {
    return (t * (b + b_prime)).norm() + (t * (b - b_prime)).norm();
}

}  // namespace

Eigen::Matrix3d correlation_matrix(const DensityMatrix& rho) {
    Eigen::Matrix3d t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t(i, j) = (kron(pauli()[i], pauli()[j]) * rho.rho).trace().real();
        }
    }
    return t;
}

double correlation(const DensityMatrix& rho, const Eigen::Vector3d& a,
                   const Eigen::Vector3d& b) {
    require_unit(a, "a");
    require_unit(b, "b");
    const Eigen::Matrix2cd oa =
        a(0) * pauli()[0] + a(1) * pauli()[1] + a(2) * pauli()[2];
    const Eigen::Matrix2cd ob =
        b(0) * pauli()[0] + b(1) * pauli()[1] + b(2) * pauli()[2];
    return (kron(oa, ob) * rho.rho).trace().real();
}

double chsh_value(const DensityMatrix& rho, const ChshSettings& s) {
    return correlation(rho, s.a, s.b) + correlation(rho, s.a, s.b_prime) +
           correlation(rho, s.a_prime, s.b) -
           correlation(rho, s.a_prime, s.b_prime);
}

double chsh_maximize(const DensityMatrix& rho, int grid_density,
                     int refine_iters) {
    if (grid_density < 2) {
        throw Error(ErrorCode::DomainError, "grid density must be >= 2");
    }
    const Eigen::Matrix3d t = correlation_matrix(rho);
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(
        t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double s1 = svd.singularValues()(0);
    const double s2 = svd.singularValues()(1);
    const Eigen::Vector3d u1 = svd.matrixU().col(0);
    const Eigen::Vector3d u2 = svd.matrixU().col(1);
    const Eigen::Vector3d v1 = svd.matrixV().col(0);
    const Eigen::Vector3d v2 = svd.matrixV().col(1);

    const int g = grid_density;
    const double step = 2.0 * std::numbers::pi / g;

    // In the singular plane E(alpha, beta) reduces to
    // s1 cos(alpha) cos(beta) + s2 sin(alpha) sin(beta).
    Eigen::MatrixXd e(g, g);
    std::vector<double> ca(g), sa(g);
    for (int i = 0; i < g; ++i) {
        ca[i] = std::cos(i * step);
        sa[i] = std::sin(i * step);
    }
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            e(i, j) = s1 * ca[i] * ca[j] + s2 * sa[i] * sa[j];
        }
    }
    double best = 0.0;
    int bi = 0, bj = 0, bip = 0, bjp = 0;
    for (int i = 0; i < g; ++i) {
        for (int ip = 0; ip < g; ++ip) {
            for (int j = 0; j < g; ++j) {
                for (int jp = 0; jp < g; ++jp) {
                    const double val = e(i, j) + e(i, jp) + e(ip, j) - e(ip, jp);
                    if (val > best) {
                        best = val;
                        bi = i;
                        bj = j;
                        bip = ip;
                        bjp = jp;
                    }
                }
            }
        }
    }
    Eigen::Vector3d b = ca[bj] * v1 + sa[bj] * v2;
    Eigen::Vector3d bp = ca[bjp] * v1 + sa[bjp] * v2;
    (void)bi;
    (void)bip;

    // Full-sphere coarse scan over (b, b') to guard against optima that
    // leave the singular plane for degenerate spectra.
    std::vector<Eigen::Vector3d> dirs;
    dirs.reserve(std::size_t(g) * g);
    for (int it = 0; it < g; ++it) {
        const double theta = std::numbers::pi * (it + 0.5) / g;
        for (int ip = 0; ip < g; ++ip) {
            const double phi = ip * step;
            dirs.emplace_back(std::sin(theta) * std::cos(phi),
                              std::sin(theta) * std::sin(phi),
                              std::cos(theta));
        }
    }
    for (const auto& cand_b : dirs) {
        for (const auto& cand_bp : dirs) {
            const double val = chsh_a_optimal(t, cand_b, cand_bp);
            if (val > best) {
                best = val;
                b = cand_b;
                bp = cand_bp;
            }
        }
    }

    // See-saw refinement: alternate closed-form updates of (a, a') and
    // (b, b'); each step cannot decrease the value.
    double value = chsh_a_optimal(t, b, bp);
    for (int iter = 0; iter < refine_iters; ++iter) {
        const Eigen::Vector3d a = normalized_or(t * (b + bp), b);
        const Eigen::Vector3d apr = normalized_or(t * (b - bp), bp);
        b = normalized_or(t.transpose() * (a + apr), b);
        bp = normalized_or(t.transpose() * (a - apr), bp);
        const double next = chsh_a_optimal(t, b, bp);
        if (next <= value + 1e-14) {
            value = std::max(value, next);
            break;
        }
        value = next;
    }
    return std::max(best, value);
}

double bell_bound_pure(const PureState& state) {
    const double c = concurrence_pure(state);
    const double bound = 2.0 * std::sqrt(1.0 + c * c);
    const DensityMatrix rho = to_density(state);
    for (int k = 1; k <= 2; ++k) {
        const double s = local_quantities(rho, k).s;
        const double via_s = 2.0 * std::sqrt(2.0 - s * s);
        if (std::abs(bound - via_s) > 1e-10) {
            throw Error(ErrorCode::InconsistentInputs,
                        "Bell bound mismatch between concurrence and "
                        "single-partite forms: " +
                            std::to_string(bound) + " vs " +
                            std::to_string(via_s));
        }
    }
    return bound;
}

}  // namespace triality
