#include "photocorr/commands.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "photocorr/detector_config.hpp"
#include "photocorr/errors.hpp"
#include "photocorr/geometry.hpp"
#include "photocorr/grid.hpp"
#include "photocorr/noise.hpp"

namespace photocorr {

namespace {

void stamp(ScanGrid &grid, const Scenario &scenario, const std::string &kind) {
  grid.metadata["kind"] = kind;
  grid.metadata["version"] = PHOTOCORR_VERSION;
  grid.metadata["scenario"] = serialize_scenario(scenario);
  if (scenario.noise)
    grid.metadata["seed"] = std::to_string(scenario.noise->seed);
}

void require_magic(const Scenario &scenario, const char *command) {
  if (scenario.detectors.placement != Placement::magic)
    throw ConfigError(std::string(command) + ": detectors.placement must be magic");
  if (scenario.chain.n_atoms < 2)
    throw ConfigError(std::string(command) + ": magic placement needs n_atoms >= 2");
}

} // namespace

DetectorSet scenario_phases(const Scenario &scenario, double delta1,
                            std::optional<double> delta2) {
  const std::size_t n = scenario.chain.n_atoms;
  std::vector<double> p(n, 0.0);
  if (scenario.detectors.placement == Placement::magic) {
    if (n >= 2) {
      const auto magic = parity_of(n) == Parity::even ? magic_config_even(n, delta1)
                                                      : magic_config_odd(n, delta1);
      p.assign(magic.phases().begin(), magic.phases().end());
    }
  } else {
    const auto &given = scenario.detectors.phases;
    for (std::size_t i = 2; i < n; ++i) {
      if (!given[i])
        throw ConfigError("detectors.phases: detector " + std::to_string(i + 1) +
                          " is free but only detectors 1 and 2 can be scanned");
      p[i] = *given[i];
    }
    if (n >= 2) {
      switch (scenario.detectors.delta2) {
      case Delta2Mode::anti: p[1] = -delta1; break;
      case Delta2Mode::equal: p[1] = delta1; break;
      case Delta2Mode::fixed: p[1] = *given[1]; break;
      }
    }
  }
  p[0] = delta1;
  if (delta2) {
    if (n < 2)
      throw ConfigError("2-D scan needs n_atoms >= 2");
    p[1] = *delta2;
  }
  return DetectorSet(std::move(p));
}

ScanGrid scan1d(const Scenario &scenario) {
  scenario.validate();
  const auto chain = scenario.atom_chain();
  ScanGrid grid;
  grid.axis1 = uniform_grid(scenario.grid.delta1_min, scenario.grid.delta1_max, scenario.grid.points);
  grid.values.reserve(grid.axis1.size());
  for (double x : grid.axis1)
    grid.values.push_back(g_n(chain, scenario_phases(scenario, x)));
  stamp(grid, scenario, "scan1d");
  return grid;
}

ScanGrid scan2d(const Scenario &scenario) {
  scenario.validate();
  const auto chain = scenario.atom_chain();
  ScanGrid grid;
  grid.axis1 = uniform_grid(scenario.grid.delta1_min, scenario.grid.delta1_max, scenario.grid.points);
  grid.axis2 = uniform_grid(scenario.grid.delta2_min, scenario.grid.delta2_max, scenario.grid.points2);
  grid.values.reserve(grid.axis1.size() * grid.axis2->size());
  for (double x : grid.axis1)
    for (double y : *grid.axis2)
      grid.values.push_back(g_n(chain, scenario_phases(scenario, x, y)));
  stamp(grid, scenario, "scan2d");
  return grid;
}

ScanGrid g1scan(const Scenario &scenario) {
  scenario.validate();
  const auto chain = scenario.atom_chain();
  ScanGrid grid;
  grid.axis1 = uniform_grid(scenario.grid.delta1_min, scenario.grid.delta1_max, scenario.grid.points);
  for (double x : grid.axis1)
    grid.values.push_back(g1_superposition(chain, x));
  stamp(grid, scenario, "g1scan");
  return grid;
}

std::vector<NoiseRow> noise_sweep(const Scenario &scenario, std::span<const double> sigmas,
                                  unsigned threads) {
  scenario.validate();
  require_magic(scenario, "noise-sweep");
  const auto chain = scenario.atom_chain();
  const std::size_t n = chain.size();
  const std::size_t m = fringe_multiplier(n);
  const auto noise = scenario.noise.value_or(Scenario::Noise{});

  std::vector<NoiseRow> rows;
  for (double sigma : sigmas) {
    const NoiseSpec spec{sigma, noise.samples, noise.seed};
    const auto grid = jittered_scan(chain, parity_of(n), spec, scenario.grid.points,
                                    {scenario.grid.delta1_min, scenario.grid.delta1_max}, threads);
    const auto est = fit_visibility(grid, m);
    rows.push_back({sigma, est.visibility, est.standard_error, analytic_contrast(n, sigma)});
  }
  return rows;
}

SampleResult sample(const Scenario &scenario) {
  scenario.validate();
  require_magic(scenario, "sample");
  const auto chain = scenario.atom_chain();
  const auto cfg = scenario.sampler.value_or(Scenario::Sampler{});
  const std::size_t m = fringe_multiplier(chain.size());
  SampleResult result;
  result.batch = sample_events(chain, parity_of(chain.size()), cfg.events,
                               {scenario.grid.delta1_min, scenario.grid.delta1_max}, cfg.seed);
  result.estimate = estimate_visibility_from_events(result.batch, m, cfg.bins);
  result.fringe_multiplier = m;
  return result;
}

FeasibilityReport feasibility(const Scenario &scenario, const FeasibilityParams &params,
                              double safety_factor) {
  params.validate();
  const std::size_t n = scenario.chain.n_atoms;
  const AtomChain chain(n, params.d / params.lambda);
  const double k = 2.0 * std::numbers::pi / params.lambda;
  const double s = std::abs(std::sin(params.theta));

  FeasibilityReport r;
  r.n_atoms = n;
  r.min_distance = min_farfield_distance(params, n, safety_factor);
  r.phase_at_theta = phase_from_angle(chain, params.theta);
  r.phase_resolution = phase_resolution(chain, params.theta, params.delta_theta);
  r.sigma = propagate_sigma(params);
  r.sigma_linear = params.delta_k_rel * k * params.d * s + k * params.delta_d * s +
                   std::abs(r.phase_resolution);
  r.predicted_contrast = analytic_contrast(n, r.sigma);
  r.notes = "sigma combines the delta_k, delta_d and delta_theta phase errors as independent "
            "1-sigma terms in quadrature (first order in kd sin(theta)); sigma_linear is the "
            "worst-case linear sum. Correlated or higher-order error models give different values.";
  return r;
}

std::string render(const ScanGrid &grid, OutputFormat format) {
  return format == OutputFormat::csv ? to_csv(grid) : to_json(grid);
}

std::string render(const std::vector<NoiseRow> &rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "sigma,visibility,standard_error,analytic\n";
    for (const auto &r : rows)
      out << format_double(r.sigma) << ',' << format_double(r.visibility) << ','
          << format_double(r.standard_error) << ',' << format_double(r.analytic) << '\n';
    return out.str();
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto &r : rows)
    j.push_back({{"sigma", r.sigma},
                 {"visibility", r.visibility},
                 {"standard_error", r.standard_error},
                 {"analytic", r.analytic}});
  return j.dump(2) + "\n";
}

std::string render(const SampleResult &result, OutputFormat format) {
  const auto &e = result.estimate;
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "# visibility=" << format_double(e.visibility)
        << " standard_error=" << format_double(e.standard_error)
        << " fringe_multiplier=" << result.fringe_multiplier << " seed=" << result.batch.seed
        << "\n";
    out << "delta1\n";
    for (double x : result.batch.delta1_values)
      out << format_double(x) << '\n';
    return out.str();
  }
  nlohmann::ordered_json j;
  j["range"] = {result.batch.range.first, result.batch.range.second};
  j["seed"] = result.batch.seed;
  j["fringe_multiplier"] = result.fringe_multiplier;
  j["estimate"] = {{"visibility", e.visibility},
                   {"offset", e.offset},
                   {"phase_shift", e.phase_shift},
                   {"rms_residual", e.rms_residual},
                   {"standard_error", e.standard_error}};
  j["events"] = result.batch.delta1_values;
  return j.dump(2) + "\n";
}

std::string render(const FeasibilityReport &r, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "quantity,value\n"
        << "n_atoms," << r.n_atoms << '\n'
        << "min_farfield_distance_m," << format_double(r.min_distance) << '\n'
        << "phase_at_theta_rad," << format_double(r.phase_at_theta) << '\n'
        << "phase_resolution_rad," << format_double(r.phase_resolution) << '\n'
        << "sigma_rad," << format_double(r.sigma) << '\n'
        << "sigma_linear_rad," << format_double(r.sigma_linear) << '\n'
        << "predicted_contrast," << format_double(r.predicted_contrast) << '\n'
        << "# " << r.notes << '\n';
    return out.str();
  }
  nlohmann::ordered_json j;
  j["n_atoms"] = r.n_atoms;
  j["min_farfield_distance_m"] = r.min_distance;
  j["phase_at_theta_rad"] = r.phase_at_theta;
  j["phase_resolution_rad"] = r.phase_resolution;
  j["sigma_rad"] = r.sigma;
  j["sigma_linear_rad"] = r.sigma_linear;
  j["predicted_contrast"] = r.predicted_contrast;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

} // namespace photocorr
