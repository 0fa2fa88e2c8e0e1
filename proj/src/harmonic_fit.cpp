#include "photocorr/harmonic_fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "photocorr/errors.hpp"

namespace photocorr {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

// Inverse of a symmetric positive-definite 3x3 matrix via the adjugate.
Mat3 inverse(const Mat3 &m) {
  Mat3 c{};
  c[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  c[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  c[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  c[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  c[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  c[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  c[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  c[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  c[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double det = m[0][0] * c[0][0] + m[0][1] * c[1][0] + m[0][2] * c[2][0];
  const double scale = std::max({std::abs(m[0][0]), std::abs(m[1][1]), std::abs(m[2][2])});
  if (!(std::abs(det) > 1e-12 * scale * scale * scale))
    throw FitError("harmonic fit: singular design (grid does not resolve the harmonic)");
  for (auto &row : c)
    for (double &v : row)
      v /= det;
  return c;
}

} // namespace

VisibilityEstimate fit_harmonic(std::span<const double> x, std::span<const double> y,
                                std::size_t m) {
  if (x.size() != y.size())
    throw FitError("harmonic fit: x and y lengths differ");
  if (x.size() < 4)
    throw FitError("harmonic fit: need at least 4 samples");
  if (m == 0)
    throw FitError("harmonic fit: harmonic must be >= 1");

  const double freq = static_cast<double>(m);
  Mat3 gram{};
  std::array<double, 3> rhs{};
  double y_scale = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::array<double, 3> basis{1.0, std::cos(freq * x[i]), std::sin(freq * x[i])};
    for (int r = 0; r < 3; ++r) {
      rhs[r] += basis[r] * y[i];
      for (int c = 0; c < 3; ++c)
        gram[r][c] += basis[r] * basis[c];
    }
    y_scale = std::max(y_scale, std::abs(y[i]));
  }
  const Mat3 inv = inverse(gram);
  std::array<double, 3> coef{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      coef[r] += inv[r][c] * rhs[c];

  const double a = coef[0], b = coef[1], c = coef[2];
  if (!(std::abs(a) > 1e-12 * y_scale) || y_scale == 0.0)
    throw FitError("harmonic fit: offset is zero, visibility undefined");

  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (a + b * std::cos(freq * x[i]) + c * std::sin(freq * x[i]));
    rss += r * r;
  }
  const auto n = static_cast<double>(x.size());
  const double s2 = rss / (n - 3.0);

  VisibilityEstimate est;
  const double amp = std::hypot(b, c);
  est.offset = a;
  est.visibility = amp / a;
  est.phase_shift = std::atan2(-c, b);
  est.rms_residual = std::sqrt(rss / n);

  // Delta-method propagation of cov = s2 * inv(gram) through amp / a.
  std::array<double, 3> grad{};
  if (amp > 0.0) {
    grad = {-amp / (a * a), b / (amp * a), c / (amp * a)};
    double var = 0.0;
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k)
        var += grad[r] * inv[r][k] * grad[k];
    est.standard_error = std::sqrt(std::max(0.0, s2 * var));
  } else {
    est.standard_error = std::sqrt(std::max(0.0, s2 * (inv[1][1] + inv[2][2]))) / std::abs(a);
  }
  return est;
}

} // namespace photocorr
