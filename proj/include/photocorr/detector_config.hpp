#pragma once

#include <cstddef>

#include "photocorr/correlation.hpp"

namespace photocorr {

enum class Parity { even, odd };

inline Parity parity_of(std::size_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

/// Detector placements that collapse G^(N)(delta1) to a single cosine.
///
/// Detector 2 mirrors detector 1 (delta2 = -delta1); detectors 3..N alternate
/// between +2pi/m' and -2pi/m', with m' = N for even N and N+1 for odd N.
/// The collapsed signal is amplitude * [1 + cos(fringe_multiplier * delta1)].
struct MagicConfig {
  Parity parity;
  std::size_t n;
  std::size_t fringe_multiplier;
  double amplitude; ///< A_N, derived numerically from g_n

  /// Full phase vector with detector 1 at delta1.
  DetectorSet phases(double delta1) const;
};

/// Even-N placement. Throws DomainError for odd n or n < 2.
DetectorSet magic_config_even(std::size_t n, double delta1);

/// Odd-N placement. Throws DomainError for even n or n < 3.
DetectorSet magic_config_odd(std::size_t n, double delta1);

/// N for even chains, N+1 for odd ones.
std::size_t fringe_multiplier(std::size_t n);

/// A_N = g_n(magic config at delta1 = 0) / 2. Throws DomainError if parity does
/// not match n, CapExceeded beyond the Ryser cap.
double derive_amplitude(std::size_t n, Parity parity);

/// Builds the config for n and derives its amplitude.
MagicConfig make_magic_config(std::size_t n);

/// amplitude * [1 + cos(fringe_multiplier * delta1)]
double closed_form(const MagicConfig &config, double delta1);

/// Max |g_n - closed_form| over a uniform, endpoint-inclusive delta1 grid on
/// [-pi, pi]. Throws DomainError for grid_points < 3.
double verify_collapse(std::size_t n, Parity parity, std::size_t grid_points = 1001);

} // namespace photocorr
