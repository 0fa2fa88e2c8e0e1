#pragma once

#include <cstddef>
#include <vector>

namespace photocorr {

/// `points` uniformly spaced values from lo to hi, both endpoints included.
/// A single point yields {lo}.
inline std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

} // namespace photocorr
