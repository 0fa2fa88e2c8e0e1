#pragma once

// Test-only reference computations, independent of the library's Ryser and
// Monte Carlo paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

namespace photocorr::oracle {

/// Exact mean of G^(N) when detectors 2..N carry independent N(0, sigma^2)
/// phase errors. Expands |gamma|^2 as a double permutation sum; each term is
/// exp(-i sum_k dj_k delta_k) and its Gaussian average multiplies it by
/// exp(-sigma^2/2 sum_{k>=2} dj_k^2), with dj_k = j_{p(k)} - j_{q(k)}.
inline double jittered_mean(const std::vector<double> &ideal_phases, double sigma) {
  const std::size_t n = ideal_phases.size();
  std::vector<double> j(n);
  for (std::size_t a = 0; a < n; ++a)
    j[a] = double(a) - 0.5 * double(n - 1);

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  double sum = 0.0;
  for (const auto &a : perms)
    for (const auto &b : perms) {
      double phase = 0.0, damp = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double dj = j[a[k]] - j[b[k]];
        phase += dj * ideal_phases[k];
        if (k >= 1)
          damp += dj * dj;
      }
      sum += std::cos(phase) * std::exp(-0.5 * sigma * sigma * damp);
    }
  return sum * std::pow(double(n), -double(n));
}

/// Visibility sqrt(b^2 + c^2)/a of y = a + b cos(m x) + c sin(m x) from
/// samples on a whole number of periods, by discrete Fourier projection.
inline double projected_visibility(const std::vector<double> &x, const std::vector<double> &y,
                                   double m) {
  double a = 0.0, b = 0.0, c = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    a += y[i];
    b += y[i] * std::cos(m * x[i]);
    c += y[i] * std::sin(m * x[i]);
  }
  const double n = double(x.size());
  return 2.0 * std::hypot(b / n, c / n) / (a / n);
}

} // namespace photocorr::oracle
