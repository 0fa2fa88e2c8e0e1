#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "photocorr/detector_config.hpp"
#include "photocorr/geometry.hpp"
#include "photocorr/harmonic_fit.hpp"

namespace photocorr {

/// Detector-1 phases of post-selected N-fold coincidences.
struct EventBatch {
  std::vector<double> delta1_values;
  std::pair<double, double> range;
  std::uint64_t seed = 0;
};

/// Draws n_events i.i.d. delta1 values from the collapsed fringe density
/// A_N [1 + cos(m delta1)] restricted to `range`, by rejection against its
/// maximum. The range must be non-empty and lie inside [-kd, kd].
EventBatch sample_events(const AtomChain &chain, Parity parity, std::size_t n_events,
                         std::pair<double, double> range, std::uint64_t seed);

/// Normalised CDF of 1 + cos(m x) on [lo, hi].
double fringe_cdf(double x, std::size_t m, std::pair<double, double> range);

/// Bin counts of `batch` over its range.
std::vector<double> histogram(const EventBatch &batch, std::size_t n_bins);

/// Histograms the batch and fits the harmonic m to the bin counts.
/// Throws DomainError for n_bins < 3m or an empty batch, FitError when more
/// than half of the bins are empty.
VisibilityEstimate estimate_visibility_from_events(const EventBatch &batch,
                                                   std::size_t fringe_multiplier,
                                                   std::size_t n_bins);

} // namespace photocorr
