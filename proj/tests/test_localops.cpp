#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "test_util.hpp"
#include "triality/localops.hpp"
#include "triality/measures.hpp"
#include "triality/sampling.hpp"

using namespace triality;
using test_util::expect_error;

TEST_CASE("su2_from_angles builds the Z-Y-Z Euler form") {
    CHECK((su2_from_angles(0, 0, 0) - Eigen::Matrix2cd::Identity()).norm() <
          1e-15);

    const double al = 0.7, be = 1.1, ga = -0.4;
    const Eigen::Matrix2cd u = su2_from_angles(al, be, ga);
    const double ch = std::cos(be / 2), sh = std::sin(be / 2);
    CHECK(std::abs(u(0, 0) - std::polar(ch, -(al + ga) / 2)) < 1e-15);
    CHECK(std::abs(u(0, 1) + std::polar(sh, -(al - ga) / 2)) < 1e-15);
    CHECK(std::abs(u(1, 0) - std::polar(sh, (al - ga) / 2)) < 1e-15);
    CHECK(std::abs(u(1, 1) - std::polar(ch, (al + ga) / 2)) < 1e-15);
    CHECK(std::abs(u.determinant() - Complex(1, 0)) < 1e-15);
    CHECK((u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm() < 1e-15);
}

TEST_CASE("kron lays out blocks in the fixed basis order") {
    Eigen::Matrix2cd x, y;
    x << Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0);
    y << Complex(0, 1), Complex(5, 0), Complex(6, 0), Complex(0, -2);
    const Eigen::Matrix4cd k = kron(x, y);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    CHECK(k(2 * i + a, 2 * j + b) == x(i, j) * y(a, b));
                }
            }
        }
    }
}

TEST_CASE("apply_local: identity acts trivially") {
    SeededSource src(17);
    const DensityMatrix rho = random_density(src, 3);
    const DensityMatrix same = apply_local(LocalUnitary::identity(), rho);
    CHECK(same.rho == rho.rho);
}

TEST_CASE("apply_local preserves trace, purity, C and S") {
    SeededSource src(18);
    for (int i = 0; i < 50; ++i) {
        const DensityMatrix rho = random_density(src, 4);
        const LocalUnitary u = random_local_unitary(src);
        const DensityMatrix rotated = apply_local(u, rho);
        CHECK(std::abs(rotated.rho.trace().real() - 1.0) < 1e-13);
        CHECK(std::abs(purity(rotated) - purity(rho)) < 1e-13);
        CHECK(std::abs(concurrence_mixed(rotated) - concurrence_mixed(rho)) <
              1e-10);
        for (int k : {1, 2}) {
            CHECK(std::abs(local_quantities(rotated, k).s -
                           local_quantities(rho, k).s) < 1e-12);
        }
    }
}

TEST_CASE("a quarter turn trades P for V at constant S") {
    Eigen::Vector4cd v;
    v << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 0);
    const DensityMatrix rho = to_density(make_pure(v));
    LocalUnitary u = LocalUnitary::identity();
    u.u1 = su2_from_angles(0.0, std::numbers::pi / 2, 0.0);
    const DensityMatrix rotated = apply_local(u, rho);

    CHECK(local_quantities(rho, 1).v == doctest::Approx(0.0));
    CHECK(local_quantities(rho, 1).p == doctest::Approx(1.0));
    CHECK(local_quantities(rotated, 1).v == doctest::Approx(1.0));
    CHECK(local_quantities(rotated, 1).p == doctest::Approx(0.0));
    CHECK(local_quantities(rotated, 1).s ==
          doctest::Approx(local_quantities(rho, 1).s));
}

TEST_CASE("maximize_visibility reaches the Bloch-vector length") {
    SeededSource src(23);
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho =
            (i % 2 == 0) ? to_density(haar_pure(src)) : random_density(src, 2);
        for (int k : {1, 2}) {
            const LocalQuantities q = local_quantities(rho, k);
            const VisibilityMax vm = maximize_visibility(rho, k);
            CHECK(std::abs(vm.v_max - q.s) < 1e-12);
            // the returned unitary really achieves the maximum
            const DensityMatrix rotated = apply_local(vm.unitary, rho);
            CHECK(std::abs(local_quantities(rotated, k).v - vm.v_max) < 1e-12);
        }
    }
}

TEST_CASE("random rotations never beat the closed-form maximum") {
    SeededSource src(24);
    const DensityMatrix rho = to_density(haar_pure(src));
    const VisibilityMax vm = maximize_visibility(rho, 1);
    for (int i = 0; i < 500; ++i) {
        LocalUnitary u = random_local_unitary(src);
        u.u2 = Eigen::Matrix2cd::Identity();
        CHECK(local_quantities(apply_local(u, rho), 1).v <= vm.v_max + 1e-9);
    }
}

TEST_CASE("maximize_visibility on a zero Bloch vector") {
    const DensityMatrix mm =
        validate_density(0.25 * Eigen::Matrix4cd::Identity());
    const VisibilityMax vm = maximize_visibility(mm, 1);
    CHECK(vm.v_max == 0.0);
    CHECK(vm.unitary.u1 == Eigen::Matrix2cd::Identity());
    expect_error([&] { maximize_visibility(mm, 5); }, ErrorCode::DomainError);
}

TEST_CASE("transducer entries are balanced and unitary") {
    const double inv = 1.0 / std::numbers::sqrt2;
    const Eigen::Matrix2cd t0 = transducer_symmetric(0.0);
    CHECK(std::abs(t0(0, 0) - Complex(inv, 0)) < 1e-15);
    CHECK(std::abs(t0(0, 1) - Complex(0, inv)) < 1e-15);
    CHECK(std::abs(t0(1, 0) - Complex(0, inv)) < 1e-15);
    CHECK(std::abs(t0(1, 1) - Complex(inv, 0)) < 1e-15);

    for (double phi : {0.3, 1.7, 4.4}) {
        const Eigen::Matrix2cd t = transducer_symmetric(phi);
        CHECK((t.adjoint() * t - Eigen::Matrix2cd::Identity()).norm() < 1e-15);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                CHECK(std::abs(std::abs(t(i, j)) - inv) < 1e-15);
            }
        }
    }
}
