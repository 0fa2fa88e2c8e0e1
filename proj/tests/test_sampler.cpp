#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/chi_squared.hpp>

#include "photocorr/errors.hpp"
#include "photocorr/sampler.hpp"

using namespace photocorr;
using std::numbers::pi;

namespace {

double ks_statistic(std::vector<double> xs, std::size_t m, std::pair<double, double> range) {
  std::sort(xs.begin(), xs.end());
  const double n = double(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = fringe_cdf(xs[i], m, range);
    d = std::max({d, f - double(i) / n, double(i + 1) / n - f});
  }
  return d;
}

// Asymptotic two-sided Kolmogorov critical value at alpha = 0.001:
// sqrt(-ln(alpha/2)/2) / sqrt(n).
double ks_critical(std::size_t n) { return std::sqrt(-0.5 * std::log(0.0005)) / std::sqrt(double(n)); }

} // namespace

TEST_CASE("sample_events basic contract") {
  const AtomChain chain(4, 1.0);
  const auto one = sample_events(chain, Parity::even, 1, {-0.5, 0.5}, 3);
  REQUIRE(one.delta1_values.size() == 1);
  CHECK(one.delta1_values[0] >= -0.5);
  CHECK(one.delta1_values[0] <= 0.5);

  const auto a = sample_events(chain, Parity::even, 1000, {-pi, pi}, 12);
  const auto b = sample_events(chain, Parity::even, 1000, {-pi, pi}, 12);
  CHECK(a.delta1_values == b.delta1_values);
  for (double x : a.delta1_values) {
    CHECK(x >= -pi);
    CHECK(x <= pi);
  }

  CHECK_THROWS_AS(sample_events(chain, Parity::even, 10, {1.0, 1.0}, 1), DomainError);
  CHECK_THROWS_AS(sample_events(chain, Parity::even, 0, {0.0, 1.0}, 1), DomainError);
  CHECK_THROWS_AS(sample_events(AtomChain(4, 0.25), Parity::even, 10, {-pi, pi}, 1), DomainError);
}

TEST_CASE("sampled events avoid fringe zeros") {
  const AtomChain chain(4, 1.0);
  const auto batch = sample_events(chain, Parity::even, 100000, {-pi / 4, 3 * pi / 4}, 8);
  const auto near_zero = std::count_if(batch.delta1_values.begin(), batch.delta1_values.end(),
                                       [](double x) { return std::abs(x - pi / 4) < 0.5e-3; });
  // Expected count in the bin is ~3e-7 events.
  CHECK(near_zero == 0);
}

TEST_CASE("chi-square goodness of fit, N=4") {
  const AtomChain chain(4, 1.0);
  const std::pair<double, double> range{-pi / 4, pi / 4};
  const std::size_t events = 100000, bins = 64;
  const auto batch = sample_events(chain, Parity::even, events, range, 2024);
  const auto counts = histogram(batch, bins);
  double chi2 = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    const double lo = range.first + (range.second - range.first) * double(b) / bins;
    const double hi = range.first + (range.second - range.first) * double(b + 1) / bins;
    const double expected = events * (fringe_cdf(hi, 4, range) - fringe_cdf(lo, 4, range));
    chi2 += (counts[b] - expected) * (counts[b] - expected) / expected;
  }
  const boost::math::chi_squared dist(double(bins - 1));
  CHECK(boost::math::cdf(boost::math::complement(dist, chi2)) > 0.001);
}

TEST_CASE("Kolmogorov-Smirnov against the exact CDF") {
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    CAPTURE(n);
    const AtomChain chain(n, 1.0);
    const std::size_t m = fringe_multiplier(n);
    const std::pair<double, double> range{-pi, pi};
    const auto batch = sample_events(chain, parity_of(n), 100000, range, 100 + n);
    CHECK(ks_statistic(batch.delta1_values, m, range) < ks_critical(100000));
  }
}

TEST_CASE("estimate_visibility_from_events") {
  const AtomChain chain(4, 1.0);
  SUBCASE("collapsed fringe") {
    const auto batch = sample_events(chain, Parity::even, 100000, {-pi / 2, pi / 2}, 5);
    const auto est = estimate_visibility_from_events(batch, 4, 64);
    CHECK(std::abs(est.visibility - 1.0) < 0.02);
    CHECK(est.standard_error > 0.0);
    CHECK(est.standard_error < 0.02);
  }
  SUBCASE("flat events") {
    EventBatch flat{{}, {-pi / 2, pi / 2}, 0};
    for (int i = 0; i < 64000; ++i)
      flat.delta1_values.push_back(-pi / 2 + pi * (i + 0.5) / 64000.0);
    const auto est = estimate_visibility_from_events(flat, 4, 64);
    CHECK(est.visibility < 1e-3);
  }
  SUBCASE("ten events") {
    const auto batch = sample_events(chain, Parity::even, 10, {-pi / 2, pi / 2}, 5);
    VisibilityEstimate est;
    CHECK_NOTHROW(est = estimate_visibility_from_events(batch, 1, 4));
    CHECK(std::isfinite(est.standard_error));
    CHECK(est.standard_error > 0.05);
  }
  SUBCASE("errors") {
    const auto batch = sample_events(chain, Parity::even, 10, {-pi / 2, pi / 2}, 5);
    CHECK_THROWS_AS(estimate_visibility_from_events(batch, 4, 64), FitError);
    CHECK_THROWS_AS(estimate_visibility_from_events(batch, 4, 8), DomainError);
    CHECK_THROWS_AS(estimate_visibility_from_events(EventBatch{{}, {0, 1}, 0}, 1, 3), DomainError);
  }
}

TEST_CASE("standard error shrinks like 1/sqrt(n_events)") {
  const AtomChain chain(4, 1.0);
  std::vector<double> se;
  for (std::size_t events : {25000u, 50000u, 100000u, 200000u}) {
    const auto batch = sample_events(chain, Parity::even, events, {-pi / 2, pi / 2}, 77);
    se.push_back(estimate_visibility_from_events(batch, 4, 64).standard_error);
  }
  for (std::size_t i = 1; i < se.size(); ++i)
    CHECK(se[i - 1] / se[i] == doctest::Approx(std::sqrt(2.0)).epsilon(0.2));
}
