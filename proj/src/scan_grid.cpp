#include "photocorr/scan_grid.hpp"

#include <sstream>

#include <json.hpp>

#include "photocorr/errors.hpp"
#include "photocorr/scenario.hpp"

namespace photocorr {

void ScanGrid::validate() const {
  const std::size_t expected = axis1.size() * (axis2 ? axis2->size() : 1);
  if (values.size() != expected)
    throw ConfigError("scan grid has " + std::to_string(values.size()) + " values, expected " +
                      std::to_string(expected));
}

std::string to_csv(const ScanGrid &grid) {
  grid.validate();
  std::ostringstream out;
  if (grid.is_2d()) {
    out << "delta1,delta2,G\n";
    const auto &a2 = *grid.axis2;
    for (std::size_t i = 0; i < grid.axis1.size(); ++i)
      for (std::size_t k = 0; k < a2.size(); ++k)
        out << format_double(grid.axis1[i]) << ',' << format_double(a2[k]) << ','
            << format_double(grid.values[i * a2.size() + k]) << '\n';
  } else {
    out << "delta1,G\n";
    for (std::size_t i = 0; i < grid.axis1.size(); ++i)
      out << format_double(grid.axis1[i]) << ',' << format_double(grid.values[i]) << '\n';
  }
  return out.str();
}

std::string to_json(const ScanGrid &grid) {
  grid.validate();
  nlohmann::ordered_json j;
  j["axis1"] = grid.axis1;
  if (grid.axis2)
    j["axis2"] = *grid.axis2;
  j["values"] = grid.values;
  j["metadata"] = grid.metadata;
  return j.dump(2) + "\n";
}

ScanGrid scan_grid_from_json(const std::string &text) {
  ScanGrid grid;
  try {
    const auto j = nlohmann::json::parse(text);
    grid.axis1 = j.at("axis1").get<std::vector<double>>();
    if (j.contains("axis2"))
      grid.axis2 = j.at("axis2").get<std::vector<double>>();
    grid.values = j.at("values").get<std::vector<double>>();
    if (j.contains("metadata"))
      grid.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("scan grid JSON: ") + e.what());
  }
  grid.validate();
  return grid;
}

} // namespace photocorr
