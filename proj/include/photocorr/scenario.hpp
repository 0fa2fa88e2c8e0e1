#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "photocorr/geometry.hpp"
#include "photocorr/noise.hpp"

namespace photocorr {

enum class Placement { magic, explicit_phases };

/// How detector 2 follows detector 1 in 1-D scans of explicit placements.
enum class Delta2Mode { anti, equal, fixed };

enum class OutputFormat { csv, json };

/// Everything a CLI command needs, loaded from a sectioned key = value file:
///
///     [chain]        n_atoms, spacing_over_lambda
///     [detectors]    placement (magic|explicit), phases (comma list, * = free),
///                    delta2 (anti|equal|fixed)
///     [grid]         delta1_min, delta1_max, points, delta2_min, delta2_max, points2
///     [noise]        sigmas (comma list), samples, seed
///     [sampler]      events, bins, seed
///     [feasibility]  detector_size, theta, delta_theta, d, delta_d, lambda,
///                    delta_k_rel, safety_factor
///     [output]       format (csv|json)
///
/// Unknown sections or keys are errors. Angles are radians; theta is measured
/// from the chain normal.
struct Scenario {
  struct Chain {
    std::size_t n_atoms = 2;
    double spacing_over_lambda = 1.0;
    bool operator==(const Chain &) const = default;
  };
  struct Detectors {
    Placement placement = Placement::magic;
    std::vector<std::optional<double>> phases; ///< nullopt marks a free detector
    Delta2Mode delta2 = Delta2Mode::anti;
    bool operator==(const Detectors &) const = default;
  };
  struct Grid {
    double delta1_min = -std::numbers::pi;
    double delta1_max = std::numbers::pi;
    std::size_t points = 1001;
    double delta2_min = -std::numbers::pi;
    double delta2_max = std::numbers::pi;
    std::size_t points2 = 201;
    bool operator==(const Grid &) const = default;
  };
  struct Noise {
    std::vector<double> sigmas{0.0};
    std::size_t samples = 10000;
    std::uint64_t seed = kDefaultSeed;
    bool operator==(const Noise &) const = default;
  };
  struct Sampler {
    std::size_t events = 100000;
    std::size_t bins = 64;
    std::uint64_t seed = kDefaultSeed;
    bool operator==(const Sampler &) const = default;
  };
  struct Feasibility {
    FeasibilityParams params;
    double safety_factor = 1.0;
    bool operator==(const Feasibility &) const = default;
  };

  Chain chain;
  Detectors detectors;
  Grid grid;
  std::optional<Noise> noise;
  std::optional<Sampler> sampler;
  std::optional<Feasibility> feasibility;
  OutputFormat format = OutputFormat::csv;

  bool operator==(const Scenario &) const = default;

  AtomChain atom_chain() const { return AtomChain(chain.n_atoms, chain.spacing_over_lambda); }

  /// Cross-field checks (phase count = n_atoms, grid sizes, ...). Throws ConfigError.
  void validate() const;
};

/// Throws ConfigError with a "line N:" prefix on malformed input.
Scenario parse_scenario(const std::string &text);
Scenario load_scenario(const std::string &path);

/// Writes every field back in the file format; parse_scenario(serialize(s)) == s.
std::string serialize_scenario(const Scenario &scenario);

/// Lossless decimal form of a double (shortest round-trip representation).
std::string format_double(double value);

} // namespace photocorr
