#include "fdsec/random.hpp"

#include <cmath>

namespace fdsec {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

PhiloxCounter philox4x32(PhiloxCounter c, PhiloxKey k) noexcept {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += kW0;
            k[1] += kW1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kM0, c[0], hi0, lo0);
        mulhilo(kM1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
    return c;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t trial, Stream stream,
                       std::uint32_t substream) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      stream_(static_cast<std::uint32_t>(stream) | (substream << 4)),
      trial_lo_(static_cast<std::uint32_t>(trial)),
      trial_hi_(static_cast<std::uint32_t>(trial >> 32)) {}

PhiloxCounter CounterRng::block(std::uint32_t index) const noexcept {
    return philox4x32({index, stream_, trial_lo_, trial_hi_}, key_);
}

double to_unit_open(std::uint32_t hi, std::uint32_t lo) noexcept {
    const std::uint64_t x = (static_cast<std::uint64_t>(hi) << 32) | lo;
    // 52 bits keep the midpoint offset exact, so the result never rounds to 0 or 1.
    return (static_cast<double>(x >> 12) + 0.5) * 0x1.0p-52;
}

std::pair<double, double> CounterRng::uniforms(std::uint32_t index) const noexcept {
    const PhiloxCounter b = block(index);
    return {to_unit_open(b[0], b[1]), to_unit_open(b[2], b[3])};
}

double CounterRng::exponential(double u) noexcept { return -std::log(u); }

double UniformCursor::next() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const auto [a, b] = rng_->uniforms(block_++);
    spare_ = b;
    has_spare_ = true;
    return a;
}

}  // namespace fdsec
