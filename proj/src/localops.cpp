#include "triality/localops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace triality {

Eigen::Matrix2cd su2_from_angles(double alpha, double beta, double gamma) {
    const double ch = std::cos(0.5 * beta);
    const double sh = std::sin(0.5 * beta);
    const Complex ep = std::polar(1.0, 0.5 * (alpha + gamma));
    const Complex em = std::polar(1.0, 0.5 * (alpha - gamma));
    Eigen::Matrix2cd u;
    u << std::conj(ep) * ch, -std::conj(em) * sh,
         em * sh,            ep * ch;
    return u;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
        }
    }
    return out;
}

DensityMatrix apply_local(const LocalUnitary& u, const DensityMatrix& rho) {
    const Eigen::Matrix4cd big = kron(u.u1, u.u2);
    return DensityMatrix{big * rho.rho * big.adjoint()};
}

VisibilityMax maximize_visibility(const DensityMatrix& rho, int k) {
    const ReducedState reduced = partial_trace(rho, k);
    const Eigen::Vector3d r = reduced.bloch;
    const double s = r.norm();
    if (s < 1e-15) {
        // Degenerate reduced state: V_k = 0 for every rotation.
        return VisibilityMax{0.0, LocalUnitary::identity()};
    }
    // Carry the Bloch vector (polar theta, azimuth phi) onto the +x axis.
    const double theta = std::acos(std::clamp(r(2) / s, -1.0, 1.0));
    const double phi = std::atan2(r(1), r(0));
    const Eigen::Matrix2cd rot =
        su2_from_angles(0.0, 0.5 * std::numbers::pi - theta, -phi);

    LocalUnitary u = LocalUnitary::identity();
    (k == 1 ? u.u1 : u.u2) = rot;
    const Eigen::Matrix2cd rotated = rot * reduced.rho * rot.adjoint();
    const double achieved = 2.0 * std::abs(rotated(0, 1));
    return VisibilityMax{achieved, u};
}

Eigen::Matrix2cd transducer_symmetric(double phase) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd splitter;
    splitter << inv_sqrt2, i * inv_sqrt2,
                i * inv_sqrt2, inv_sqrt2;
    Eigen::Matrix2cd shifter = Eigen::Matrix2cd::Identity();
    shifter(0, 0) = std::polar(1.0, phase);
    return splitter * shifter;
}

}  // namespace triality
