#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "photocorr/correlation.hpp"
#include "photocorr/harmonic_fit.hpp"
#include "photocorr/sampler.hpp"
#include "photocorr/scan_grid.hpp"
#include "photocorr/scenario.hpp"

namespace photocorr {

/// Detector phases for a scenario with detector 1 at delta1. `delta2` sets
/// detector 2 directly (2-D scans); otherwise it follows the placement rule.
DetectorSet scenario_phases(const Scenario &scenario, double delta1,
                            std::optional<double> delta2 = std::nullopt);

/// G^(N) along delta1.
ScanGrid scan1d(const Scenario &scenario);

/// G^(N) over delta1 x delta2 with detectors 3..N fixed.
ScanGrid scan2d(const Scenario &scenario);

/// First-order rate for superposition-prepared atoms along delta1.
ScanGrid g1scan(const Scenario &scenario);

struct NoiseRow {
  double sigma;
  double visibility;
  double standard_error;
  double analytic; ///< exp(-N sigma^2 / 4)
};

/// Fitted visibility of the jittered magic-placement scan for each sigma.
std::vector<NoiseRow> noise_sweep(const Scenario &scenario, std::span<const double> sigmas,
                                  unsigned threads = 1);

struct SampleResult {
  EventBatch batch;
  VisibilityEstimate estimate;
  std::size_t fringe_multiplier;
};

SampleResult sample(const Scenario &scenario);

struct FeasibilityReport {
  std::size_t n_atoms;
  double min_distance;      ///< metres
  double phase_at_theta;    ///< kd sin(theta)
  double phase_resolution;  ///< kd cos(theta) delta_theta
  double sigma;             ///< quadrature propagation
  double sigma_linear;      ///< worst-case linear sum of the same terms
  double predicted_contrast;
  std::string notes;
};

FeasibilityReport feasibility(const Scenario &scenario, const FeasibilityParams &params,
                              double safety_factor = 1.0);

std::string render(const ScanGrid &grid, OutputFormat format);
std::string render(const std::vector<NoiseRow> &rows, OutputFormat format);
std::string render(const SampleResult &result, OutputFormat format);
std::string render(const FeasibilityReport &report, OutputFormat format);

} // namespace photocorr
