#include "photocorr/detector_config.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "photocorr/errors.hpp"
#include "photocorr/grid.hpp"

namespace photocorr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

DetectorSet alternating(std::size_t n, double delta1, double fixed) {
  std::vector<double> p(n);
  p[0] = delta1;
  p[1] = -delta1;
  // Detector i (1-based) >= 3 sits at +fixed when i is odd, -fixed when even.
  for (std::size_t i = 3; i <= n; ++i)
    p[i - 1] = (i % 2 == 1) ? fixed : -fixed;
  return DetectorSet(std::move(p));
}

} // namespace

DetectorSet MagicConfig::phases(double delta1) const {
  return parity == Parity::even ? magic_config_even(n, delta1) : magic_config_odd(n, delta1);
}

DetectorSet magic_config_even(std::size_t n, double delta1) {
  if (n < 2 || n % 2 != 0)
    throw DomainError("even placement needs even n >= 2, got " + std::to_string(n));
  return alternating(n, delta1, kTwoPi / static_cast<double>(n));
}

DetectorSet magic_config_odd(std::size_t n, double delta1) {
  if (n < 3 || n % 2 != 1)
    throw DomainError("odd placement needs odd n >= 3, got " + std::to_string(n));
  return alternating(n, delta1, kTwoPi / static_cast<double>(n + 1));
}

std::size_t fringe_multiplier(std::size_t n) { return n % 2 == 0 ? n : n + 1; }

double derive_amplitude(std::size_t n, Parity parity) {
  if (parity != parity_of(n))
    throw DomainError("parity does not match n=" + std::to_string(n));
  if (n > kRyserCap)
    throw CapExceeded("derive_amplitude: N=" + std::to_string(n) + " exceeds Ryser cap");
  const AtomChain chain(n, 1.0);
  const auto dets = parity == Parity::even ? magic_config_even(n, 0.0) : magic_config_odd(n, 0.0);
  return 0.5 * g_n(chain, dets);
}

MagicConfig make_magic_config(std::size_t n) {
  const Parity parity = parity_of(n);
  return MagicConfig{parity, n, fringe_multiplier(n), derive_amplitude(n, parity)};
}

double closed_form(const MagicConfig &config, double delta1) {
  return config.amplitude *
         (1.0 + std::cos(static_cast<double>(config.fringe_multiplier) * delta1));
}

double verify_collapse(std::size_t n, Parity parity, std::size_t grid_points) {
  if (grid_points < 3)
    throw DomainError("verify_collapse needs at least 3 grid points");
  const MagicConfig config{parity, n, fringe_multiplier(n), derive_amplitude(n, parity)};
  // Only the relative phase enters g_n, so the spacing value is irrelevant here.
  const AtomChain chain(n, 1.0);
  double worst = 0.0;
  for (double x : uniform_grid(-std::numbers::pi, std::numbers::pi, grid_points))
    worst = std::max(worst, std::abs(g_n(chain, config.phases(x)) - closed_form(config, x)));
  return worst;
}

} // namespace photocorr
