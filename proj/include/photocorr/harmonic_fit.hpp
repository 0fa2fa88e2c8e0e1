#pragma once

#include <cstddef>
#include <span>

namespace photocorr {

/// Result of fitting y = a + b cos(m x) + c sin(m x).
struct VisibilityEstimate {
  double visibility = 0.0;  ///< sqrt(b^2 + c^2) / a
  double offset = 0.0;      ///< a
  double phase_shift = 0.0; ///< phi in a + r cos(m x + phi)
  double rms_residual = 0.0;
  double standard_error = 0.0; ///< of `visibility`, from residual scatter
};

/// Linear least squares at the known harmonic m. Needs at least 4 samples
/// (3 parameters plus one residual degree of freedom). Throws FitError when
/// the normal equations are singular or the offset vanishes.
VisibilityEstimate fit_harmonic(std::span<const double> x, std::span<const double> y,
                                std::size_t m);

} // namespace photocorr
