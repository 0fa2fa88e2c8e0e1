#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <utility>

#include "photocorr/detector_config.hpp"
#include "photocorr/geometry.hpp"
#include "photocorr/harmonic_fit.hpp"
#include "photocorr/scan_grid.hpp"

namespace photocorr {

/// Gaussian detector-phase jitter.
struct NoiseSpec {
  double sigma = 0.0; ///< std dev of each jittered phase, radians
  std::size_t n_samples = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20080101;

/// Mean of g_n over `spec.n_samples` draws per delta1 grid point, with
/// detectors 2..N of the magic placement displaced by independent N(0, sigma^2)
/// phases. delta1 itself is exact. Grid point i uses RNG stream i, so output is
/// bit-identical for any `threads` value.
ScanGrid jittered_scan(const AtomChain &chain, Parity parity, const NoiseSpec &spec,
                       std::size_t grid_points,
                       std::pair<double, double> range = {-std::numbers::pi, std::numbers::pi},
                       unsigned threads = 1);

/// exp(-N sigma^2 / 4)
double analytic_contrast(std::size_t n, double sigma);

/// Harmonic fit of a 1-D scan at the known fringe multiplier. Requires at
/// least 3m points spanning two full periods (DomainError otherwise).
VisibilityEstimate fit_visibility(const ScanGrid &grid, std::size_t fringe_multiplier);

/// First-order quadrature propagation of (Δk, Δd, Δθ) through kd sin(theta):
/// sqrt((Δk d sinθ)^2 + (k Δd sinθ)^2 + (k d cosθ Δθ)^2).
double propagate_sigma(const FeasibilityParams &params);

} // namespace photocorr
