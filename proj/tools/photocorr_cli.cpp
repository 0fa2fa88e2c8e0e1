// photocorr: N-photon coincidence scans, detector placements and noise budgets.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "photocorr/commands.hpp"
#include "photocorr/errors.hpp"
#include "photocorr/scenario.hpp"

namespace {

using namespace photocorr;

enum ExitCode { kOk = 0, kConfig = 2, kCap = 3, kNumerical = 4 };

struct Overrides {
  std::string scenario_path;
  std::optional<std::size_t> n;
  std::vector<double> delta1_range;
  std::optional<std::size_t> points;
  std::vector<double> sigma;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

void add_common(CLI::App *cmd, Overrides &o) {
  cmd->add_option("--scenario", o.scenario_path, "Scenario file (sectioned key = value)");
  cmd->add_option("--n", o.n, "Override chain.n_atoms");
  cmd->add_option("--delta1-range", o.delta1_range, "Override delta1 range: MIN MAX (radians)")
      ->expected(2);
  cmd->add_option("--points", o.points, "Override grid.points");
  cmd->add_option("--seed", o.seed, "Override the RNG seed");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
}

Scenario resolve(const Overrides &o) {
  Scenario s = o.scenario_path.empty() ? Scenario{} : load_scenario(o.scenario_path);
  if (o.n) {
    s.chain.n_atoms = *o.n;
    if (s.detectors.placement == Placement::explicit_phases)
      throw ConfigError("--n cannot resize explicit detector phases; edit the scenario");
  }
  if (!o.delta1_range.empty()) {
    s.grid.delta1_min = o.delta1_range[0];
    s.grid.delta1_max = o.delta1_range[1];
  }
  if (o.points)
    s.grid.points = *o.points;
  if (!o.sigma.empty()) {
    if (!s.noise)
      s.noise.emplace();
    s.noise->sigmas = o.sigma;
  }
  if (o.samples) {
    if (!s.noise)
      s.noise.emplace();
    s.noise->samples = *o.samples;
    if (!s.sampler)
      s.sampler.emplace();
    s.sampler->events = *o.samples;
  }
  if (o.seed) {
    if (!s.noise)
      s.noise.emplace();
    if (!s.sampler)
      s.sampler.emplace();
    s.noise->seed = *o.seed;
    s.sampler->seed = *o.seed;
  }
  if (o.format)
    s.format = *o.format == "json" ? OutputFormat::json : OutputFormat::csv;
  s.validate();
  return s;
}

unsigned worker_threads() {
  if (const char *env = std::getenv("PHOTOCORR_THREADS")) {
    try {
      return static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::exception &) {
      throw ConfigError("PHOTOCORR_THREADS must be a positive integer");
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const std::string &text, const Overrides &o) {
  if (!o.out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*o.out);
  if (!f)
    throw ConfigError("cannot write '" + *o.out + "'");
  f << text;
}

int fail(const char *category, const std::string &message, int code) {
  std::cerr << "error[" << category << "]: " << message << '\n';
  return code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"N-photon coincidence correlations for an equidistant emitter chain.\n"
               "Phases are delta = kd sin(theta) in radians, with theta measured from the\n"
               "normal to the chain axis (theta = 0 is broadside)."};
  app.require_subcommand(1);
  Overrides o;

  auto *scan1d_cmd = app.add_subcommand("scan1d", "G^(N) versus delta1");
  auto *scan2d_cmd = app.add_subcommand("scan2d", "G^(N) over delta1 x delta2, detectors 3..N fixed");
  auto *g1_cmd = app.add_subcommand("g1scan", "First-order rate for atoms prepared in (|g>+|e>)/sqrt(2)");
  auto *noise_cmd = app.add_subcommand("noise-sweep", "Fringe visibility under Gaussian detector-phase jitter");
  auto *sample_cmd = app.add_subcommand("sample", "Draw coincidence events and estimate visibility");
  auto *feas_cmd = app.add_subcommand("feasibility", "Far-field distance and phase-noise budget");
  for (auto *cmd : {scan1d_cmd, scan2d_cmd, g1_cmd, noise_cmd, sample_cmd, feas_cmd})
    add_common(cmd, o);
  noise_cmd->add_option("--sigma", o.sigma, "Jitter standard deviations (radians)");
  noise_cmd->add_option("--samples", o.samples, "Jitter draws per grid point");
  sample_cmd->add_option("--samples", o.samples, "Number of events");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e);
    return fail("config", e.what(), kConfig);
  }

  try {
    const Scenario s = resolve(o);
    if (*scan1d_cmd)
      emit(render(scan1d(s), s.format), o);
    else if (*scan2d_cmd)
      emit(render(scan2d(s), s.format), o);
    else if (*g1_cmd)
      emit(render(g1scan(s), s.format), o);
    else if (*noise_cmd) {
      const auto sigmas = s.noise ? s.noise->sigmas : Scenario::Noise{}.sigmas;
      emit(render(noise_sweep(s, sigmas, worker_threads()), s.format), o);
    } else if (*sample_cmd)
      emit(render(sample(s), s.format), o);
    else if (*feas_cmd) {
      if (!s.feasibility)
        throw ConfigError("feasibility: scenario has no [feasibility] section");
      emit(render(feasibility(s, s.feasibility->params, s.feasibility->safety_factor), s.format), o);
    }
  } catch (const ConfigError &e) {
    return fail("config", e.what(), kConfig);
  } catch (const DomainError &e) {
    return fail("config", e.what(), kConfig);
  } catch (const CapExceeded &e) {
    return fail("cap", e.what(), kCap);
  } catch (const FitError &e) {
    return fail("numerical", e.what(), kNumerical);
  }
  return kOk;
}
