#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace photocorr {

/// PCG-XSH-RR 32-bit generator (O'Neill). Each (seed, stream) pair is an
/// independent sequence; the library assigns one stream per grid point or
/// batch so results do not depend on evaluation order or thread count.
class Pcg32 {
public:
  using result_type = std::uint32_t;

  Pcg32(std::uint64_t seed, std::uint64_t stream) : inc_((stream << 1u) | 1u) {
    (*this)();
    state_ += seed;
    (*this)();
  }

  result_type operator()() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  static constexpr result_type min() { return 0u; }
  static constexpr result_type max() { return 0xFFFFFFFFu; }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    const std::uint64_t hi = (*this)() >> 5;  // 27 bits
    const std::uint64_t lo = (*this)() >> 6;  // 26 bits
    return static_cast<double>((hi << 26) | lo) * 0x1.0p-53;
  }

private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_;
};

/// Box-Muller standard normal with a cached spare. Hand-rolled rather than
/// std::normal_distribution so sequences agree across standard libraries.
class StandardNormal {
public:
  double operator()(Pcg32 &rng) {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - rng.uniform(); // (0, 1]
    const double u2 = rng.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

private:
  double spare_ = 0.0;
  bool has_spare_ = false;
};

} // namespace photocorr
