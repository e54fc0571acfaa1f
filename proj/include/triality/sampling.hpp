// sampling.hpp
// Seeded random generation: Haar pure states, Ginibre density matrices,
// Werner family, Haar local unitaries.
//
// The generator is Philox4x32-10, a counter-based algorithm, so streams are
// reproducible bit-for-bit across platforms. The 64-bit seed is the Philox
// key; the counter is (block index, stream index). Independent substreams
// come from child(), never from sharing one source between consumers.

#pragma once

#include <array>
#include <cstdint>

#include "triality/localops.hpp"
#include "triality/qstate.hpp"

namespace triality {

class SeededSource {
public:
    explicit SeededSource(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform [0, 1) with 53 random bits.
    double next_double();

    // Standard normal via Box-Muller; the second variate is cached.
    double next_gaussian();

    // Independent substream for consumer k; deterministic in (seed, stream, k).
    SeededSource child(std::uint64_t k) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffer_pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// 4 i.i.d. standard complex Gaussian amplitudes, normalized; the resulting
// distribution is invariant under every fixed 4x4 unitary.
PureState haar_pure(SeededSource& src);

// Ginibre construction G G^dag / Tr(G G^dag) with G of shape 4 x rank.
// Throws BadRank outside 1..4.
DensityMatrix random_density(SeededSource& src, int rank);

// p |Phi+><Phi+| + (1 - p) I/4. Throws DomainError outside [0, 1].
DensityMatrix werner(double p);

// Each SU(2) factor Haar-distributed (Euler angles with sin(beta) weight).
LocalUnitary random_local_unitary(SeededSource& src);

}  // namespace triality
