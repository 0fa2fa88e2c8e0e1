#include "photocorr/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "photocorr/errors.hpp"
#include "photocorr/rng.hpp"

namespace photocorr {

EventBatch sample_events(const AtomChain &chain, Parity parity, std::size_t n_events,
                         std::pair<double, double> range, std::uint64_t seed) {
  if (n_events < 1)
    throw DomainError("n_events must be >= 1");
  const auto [lo, hi] = range;
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo))
    throw DomainError("event range is empty");
  const double kd = chain.kd();
  if (lo < -kd * (1.0 + 1e-12) || hi > kd * (1.0 + 1e-12))
    throw DomainError("event range exceeds the reachable phases [-kd, kd]");

  const MagicConfig config{parity, chain.size(), fringe_multiplier(chain.size()),
                           derive_amplitude(chain.size(), parity)};
  const double envelope = 2.0 * config.amplitude;

  EventBatch batch{{}, range, seed};
  batch.delta1_values.reserve(n_events);
  Pcg32 rng(seed, 0);
  while (batch.delta1_values.size() < n_events) {
    const double x = lo + (hi - lo) * rng.uniform();
    if (rng.uniform() * envelope < closed_form(config, x))
      batch.delta1_values.push_back(x);
  }
  return batch;
}

double fringe_cdf(double x, std::size_t m, std::pair<double, double> range) {
  const auto [lo, hi] = range;
  const double f = static_cast<double>(m);
  auto primitive = [&](double t) { return t + std::sin(f * t) / f; };
  const double xc = std::clamp(x, lo, hi);
  return (primitive(xc) - primitive(lo)) / (primitive(hi) - primitive(lo));
}

std::vector<double> histogram(const EventBatch &batch, std::size_t n_bins) {
  if (n_bins < 1)
    throw DomainError("need at least one bin");
  const auto [lo, hi] = batch.range;
  std::vector<double> counts(n_bins, 0.0);
  const double width = (hi - lo) / static_cast<double>(n_bins);
  for (double x : batch.delta1_values) {
    auto b = static_cast<std::size_t>((x - lo) / width);
    counts[std::min(b, n_bins - 1)] += 1.0;
  }
  return counts;
}

VisibilityEstimate estimate_visibility_from_events(const EventBatch &batch,
                                                   std::size_t fringe_multiplier,
                                                   std::size_t n_bins) {
  if (batch.delta1_values.empty())
    throw DomainError("event batch is empty");
  if (fringe_multiplier < 1 || n_bins < 3 * fringe_multiplier)
    throw DomainError("need n_bins >= 3 * fringe_multiplier");

  const auto counts = histogram(batch, n_bins);
  const auto empty = std::count(counts.begin(), counts.end(), 0.0);
  if (2 * static_cast<std::size_t>(empty) > n_bins)
    throw FitError("insufficient statistics: " + std::to_string(empty) + " of " +
                   std::to_string(n_bins) + " bins empty");

  const auto [lo, hi] = batch.range;
  const double width = (hi - lo) / static_cast<double>(n_bins);
  std::vector<double> centres(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b)
    centres[b] = lo + width * (static_cast<double>(b) + 0.5);
  auto est = fit_harmonic(centres, counts, fringe_multiplier);
  // Bin counts integrate the fringe over each bin, which scales the harmonic
  // by sinc(m w / 2) relative to point samples.
  const double half = 0.5 * static_cast<double>(fringe_multiplier) * width;
  const double sinc = std::sin(half) / half;
  if (sinc < 0.5)
    throw DomainError("bins too wide to resolve the fringe; increase n_bins");
  est.visibility /= sinc;
  est.standard_error /= sinc;
  return est;
}

} // namespace photocorr
