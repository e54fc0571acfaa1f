#include "triality/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace triality {

namespace {

// Philox4x32-10 round constants (Salmon et al., SC'11).
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::uint32_t k0, std::uint32_t k1) {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k0 += kPhiloxW0;
            k1 += kPhiloxW1;
        }
        const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * ctr[0];
        const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * ctr[2];
        ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ k0,
               std::uint32_t(p1),
               std::uint32_t(p0 >> 32) ^ ctr[3] ^ k1,
               std::uint32_t(p0)};
    }
    return ctr;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint32_t SeededSource::next_u32() {
    if (buffer_pos_ == 4) {
        const std::array<std::uint32_t, 4> ctr = {
            std::uint32_t(block_), std::uint32_t(block_ >> 32),
            std::uint32_t(stream_), std::uint32_t(stream_ >> 32)};
        buffer_ = philox4x32_10(ctr, std::uint32_t(seed_),
                                std::uint32_t(seed_ >> 32));
        ++block_;
        buffer_pos_ = 0;
    }
    return buffer_[buffer_pos_++];
}

std::uint64_t SeededSource::next_u64() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    return (hi << 32) | lo;
}

double SeededSource::next_double() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double SeededSource::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

SeededSource SeededSource::child(std::uint64_t k) const {
    return SeededSource(seed_, splitmix64(stream_ + k + 1));
}

PureState haar_pure(SeededSource& src) {
    Eigen::Vector4cd amps;
    for (int i = 0; i < 4; ++i) {
        const double re = src.next_gaussian();
        const double im = src.next_gaussian();
        amps(i) = Complex(re, im);
    }
    return make_pure(amps);
}

DensityMatrix random_density(SeededSource& src, int rank) {
    if (rank < 1 || rank > 4) {
        throw Error(ErrorCode::BadRank,
                    "rank must be in 1..4, got " + std::to_string(rank));
    }
    Eigen::MatrixXcd g(4, rank);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < rank; ++j) {
            const double re = src.next_gaussian();
            const double im = src.next_gaussian();
            g(i, j) = Complex(re, im);
        }
    }
    Eigen::Matrix4cd rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix{rho};
}

DensityMatrix werner(double p) {
    if (p < 0.0 || p > 1.0) {
        throw Error(ErrorCode::DomainError,
                    "werner parameter must lie in [0, 1], got " +
                        std::to_string(p));
    }
    Eigen::Vector4cd phi_plus;
    phi_plus << 1.0 / std::numbers::sqrt2, 0.0, 0.0, 1.0 / std::numbers::sqrt2;
    Eigen::Matrix4cd rho = p * (phi_plus * phi_plus.adjoint());
    rho += (1.0 - p) * 0.25 * Eigen::Matrix4cd::Identity();
    return DensityMatrix{rho};
}

LocalUnitary random_local_unitary(SeededSource& src) {
    const auto haar_su2 = [&src]() {
        const double alpha = 2.0 * std::numbers::pi * src.next_double();
        const double beta = std::acos(1.0 - 2.0 * src.next_double());
        const double gamma = 2.0 * std::numbers::pi * src.next_double();
        return su2_from_angles(alpha, beta, gamma);
    };
    LocalUnitary u;
    u.u1 = haar_su2();
    u.u2 = haar_su2();
    return u;
}

}  // namespace triality
