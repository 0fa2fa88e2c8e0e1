#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace photocorr {

/// Sampled G values over a delta1 axis or a delta1 x delta2 grid.
///
/// For 2-D grids `values` is row-major with delta1 as the slow index:
/// values[i * axis2.size() + k] belongs to (axis1[i], axis2[k]).
struct ScanGrid {
  std::vector<double> axis1;
  std::optional<std::vector<double>> axis2;
  std::vector<double> values;
  std::map<std::string, std::string> metadata;

  bool is_2d() const { return axis2.has_value(); }

  /// Throws ConfigError when the value count does not match the axes.
  void validate() const;
};

/// Header row plus one line per grid point, 17 significant digits.
std::string to_csv(const ScanGrid &grid);

/// {"axis1": [...], "axis2": [...], "values": [...], "metadata": {...}}
std::string to_json(const ScanGrid &grid);

/// Parses the JSON layout written by to_json.
ScanGrid scan_grid_from_json(const std::string &text);

} // namespace photocorr
