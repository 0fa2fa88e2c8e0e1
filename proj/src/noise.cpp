#include "photocorr/noise.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "photocorr/errors.hpp"
#include "photocorr/grid.hpp"
#include "photocorr/rng.hpp"

namespace photocorr {

void NoiseSpec::validate() const {
  if (!(sigma >= 0.0) || !std::isfinite(sigma))
    throw DomainError("sigma must be finite and >= 0");
  if (n_samples < 1)
    throw DomainError("n_samples must be >= 1");
}

ScanGrid jittered_scan(const AtomChain &chain, Parity parity, const NoiseSpec &spec,
                       std::size_t grid_points, std::pair<double, double> range,
                       unsigned threads) {
  spec.validate();
  const std::size_t n = chain.size();
  if (n > kRyserCap)
    throw CapExceeded("jittered_scan: N=" + std::to_string(n) + " exceeds Ryser cap");
  if (grid_points < 2)
    throw DomainError("jittered_scan needs at least 2 grid points");
  if (parity != parity_of(n))
    throw DomainError("parity does not match n=" + std::to_string(n));

  const auto xs = uniform_grid(range.first, range.second, grid_points);
  std::vector<double> values(grid_points, 0.0);

  auto evaluate = [&](std::size_t i) {
    const auto ideal = parity == Parity::even ? magic_config_even(n, xs[i])
                                              : magic_config_odd(n, xs[i]);
    Pcg32 rng(spec.seed, i);
    StandardNormal normal;
    std::vector<double> phases(ideal.phases().begin(), ideal.phases().end());
    double sum = 0.0;
    for (std::size_t s = 0; s < spec.n_samples; ++s) {
      for (std::size_t d = 1; d < n; ++d)
        phases[d] = ideal[d] + spec.sigma * normal(rng);
      sum += g_n(chain, DetectorSet(phases));
    }
    values[i] = sum / static_cast<double>(spec.n_samples);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, grid_points));
  if (workers == 1) {
    for (std::size_t i = 0; i < grid_points; ++i)
      evaluate(i);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < grid_points; i += workers)
          evaluate(i);
      });
  }

  ScanGrid grid;
  grid.axis1 = xs;
  grid.values = std::move(values);
  grid.metadata["kind"] = "jittered_scan";
  grid.metadata["n_atoms"] = std::to_string(n);
  grid.metadata["seed"] = std::to_string(spec.seed);
  return grid;
}

double analytic_contrast(std::size_t n, double sigma) {
  if (!(sigma >= 0.0))
    throw DomainError("sigma must be >= 0");
  return std::exp(-static_cast<double>(n) * sigma * sigma / 4.0);
}

VisibilityEstimate fit_visibility(const ScanGrid &grid, std::size_t fringe_multiplier) {
  if (grid.is_2d())
    throw DomainError("fit_visibility expects a 1-D scan");
  if (fringe_multiplier < 1)
    throw DomainError("fringe multiplier must be >= 1");
  if (grid.axis1.size() != grid.values.size())
    throw DomainError("axis and value lengths differ");
  if (grid.axis1.size() < 3 * fringe_multiplier)
    throw DomainError("grid needs at least 3*m points");
  const auto [lo, hi] = std::minmax_element(grid.axis1.begin(), grid.axis1.end());
  const double period = 2.0 * std::numbers::pi / static_cast<double>(fringe_multiplier);
  if (*hi - *lo < 2.0 * period * (1.0 - 1e-12))
    throw DomainError("grid must span at least two fringe periods");
  return fit_harmonic(grid.axis1, grid.values, fringe_multiplier);
}

double propagate_sigma(const FeasibilityParams &params) {
  params.validate();
  const double k = 2.0 * std::numbers::pi / params.lambda;
  const double s = std::sin(params.theta);
  const double c = std::abs(params.theta) == std::numbers::pi / 2 ? 0.0 : std::cos(params.theta);
  const double from_k = params.delta_k_rel * k * params.d * s;
  const double from_d = k * params.delta_d * s;
  const double from_theta = k * params.d * c * params.delta_theta;
  return std::sqrt(from_k * from_k + from_d * from_d + from_theta * from_theta);
}

} // namespace photocorr
