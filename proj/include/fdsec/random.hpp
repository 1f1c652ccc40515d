#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace fdsec {

/// Philox4x32-10 block function (Salmon et al. counter-based generator).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) noexcept;

/// Independent sub-streams of one trial. Each stream is addressed by a block index,
/// so any draw can be recomputed without generating the ones before it.
enum class Stream : std::uint32_t {
    Receivers = 1,
    Eavesdroppers = 2,
    Fading = 3,
    EveChannels = 4,
};

/// Random access to the uniforms of one (seed, trial, stream).
class CounterRng {
public:
    /// `substream` separates independent copies of one stream, e.g. one per eavesdropper.
    CounterRng(std::uint64_t seed, std::uint64_t trial, Stream stream,
               std::uint32_t substream = 0) noexcept;

    /// Four 32-bit words of block `index`.
    PhiloxCounter block(std::uint32_t index) const noexcept;

    /// Two uniforms in (0, 1) from block `index`.
    std::pair<double, double> uniforms(std::uint32_t index) const noexcept;

    /// Exponential(1) variate from a uniform in (0, 1).
    static double exponential(double u) noexcept;

private:
    PhiloxKey key_;
    std::uint32_t stream_;
    std::uint32_t trial_lo_;
    std::uint32_t trial_hi_;
};

/// Uniform on a 2^-52 lattice offset by half a step, strictly inside (0, 1).
double to_unit_open(std::uint32_t hi, std::uint32_t lo) noexcept;

/// Sequential reader over the uniforms of one stream, two per block.
class UniformCursor {
public:
    UniformCursor(const CounterRng& rng, std::uint32_t first_block = 0) noexcept
        : rng_(&rng), block_(first_block) {}

    double next() noexcept;

private:
    const CounterRng* rng_;
    std::uint32_t block_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace fdsec
