#include "photocorr/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "photocorr/errors.hpp"

namespace photocorr {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string &value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(trim(item));
  if (out.size() == 1 && out[0].empty())
    out.clear();
  return out;
}

double parse_real(const std::string &text) {
  double v = 0.0;
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v))
    throw ConfigError("expected a finite number, got '" + text + "'");
  return v;
}

std::uint64_t parse_unsigned(const std::string &text) {
  std::uint64_t v = 0;
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError("expected a non-negative integer, got '" + text + "'");
  return v;
}

std::vector<double> parse_real_list(const std::string &text) {
  std::vector<double> out;
  for (const auto &item : split_list(text))
    out.push_back(parse_real(item));
  return out;
}

using Setter = std::function<void(Scenario &, const std::string &)>;
using Section = std::map<std::string, Setter>;

const std::map<std::string, Section> &schema() {
  static const std::map<std::string, Section> table = {
      {"chain",
       {
           {"n_atoms", [](Scenario &s, const std::string &v) { s.chain.n_atoms = parse_unsigned(v); }},
           {"spacing_over_lambda",
            [](Scenario &s, const std::string &v) { s.chain.spacing_over_lambda = parse_real(v); }},
       }},
      {"detectors",
       {
           {"placement",
            [](Scenario &s, const std::string &v) {
              if (v == "magic")
                s.detectors.placement = Placement::magic;
              else if (v == "explicit")
                s.detectors.placement = Placement::explicit_phases;
              else
                throw ConfigError("placement must be magic or explicit, got '" + v + "'");
            }},
           {"phases",
            [](Scenario &s, const std::string &v) {
              s.detectors.phases.clear();
              for (const auto &item : split_list(v)) {
                if (item == "*")
                  s.detectors.phases.emplace_back(std::nullopt);
                else
                  s.detectors.phases.emplace_back(parse_real(item));
              }
            }},
           {"delta2",
            [](Scenario &s, const std::string &v) {
              if (v == "anti")
                s.detectors.delta2 = Delta2Mode::anti;
              else if (v == "equal")
                s.detectors.delta2 = Delta2Mode::equal;
              else if (v == "fixed")
                s.detectors.delta2 = Delta2Mode::fixed;
              else
                throw ConfigError("delta2 must be anti, equal or fixed, got '" + v + "'");
            }},
       }},
      {"grid",
       {
           {"delta1_min", [](Scenario &s, const std::string &v) { s.grid.delta1_min = parse_real(v); }},
           {"delta1_max", [](Scenario &s, const std::string &v) { s.grid.delta1_max = parse_real(v); }},
           {"points", [](Scenario &s, const std::string &v) { s.grid.points = parse_unsigned(v); }},
           {"delta2_min", [](Scenario &s, const std::string &v) { s.grid.delta2_min = parse_real(v); }},
           {"delta2_max", [](Scenario &s, const std::string &v) { s.grid.delta2_max = parse_real(v); }},
           {"points2", [](Scenario &s, const std::string &v) { s.grid.points2 = parse_unsigned(v); }},
       }},
      {"noise",
       {
           {"sigmas", [](Scenario &s, const std::string &v) { s.noise->sigmas = parse_real_list(v); }},
           {"samples", [](Scenario &s, const std::string &v) { s.noise->samples = parse_unsigned(v); }},
           {"seed", [](Scenario &s, const std::string &v) { s.noise->seed = parse_unsigned(v); }},
       }},
      {"sampler",
       {
           {"events", [](Scenario &s, const std::string &v) { s.sampler->events = parse_unsigned(v); }},
           {"bins", [](Scenario &s, const std::string &v) { s.sampler->bins = parse_unsigned(v); }},
           {"seed", [](Scenario &s, const std::string &v) { s.sampler->seed = parse_unsigned(v); }},
       }},
      {"feasibility",
       {
           {"detector_size",
            [](Scenario &s, const std::string &v) { s.feasibility->params.detector_size = parse_real(v); }},
           {"theta", [](Scenario &s, const std::string &v) { s.feasibility->params.theta = parse_real(v); }},
           {"delta_theta",
            [](Scenario &s, const std::string &v) { s.feasibility->params.delta_theta = parse_real(v); }},
           {"d", [](Scenario &s, const std::string &v) { s.feasibility->params.d = parse_real(v); }},
           {"delta_d", [](Scenario &s, const std::string &v) { s.feasibility->params.delta_d = parse_real(v); }},
           {"lambda", [](Scenario &s, const std::string &v) { s.feasibility->params.lambda = parse_real(v); }},
           {"delta_k_rel",
            [](Scenario &s, const std::string &v) { s.feasibility->params.delta_k_rel = parse_real(v); }},
           {"safety_factor",
            [](Scenario &s, const std::string &v) { s.feasibility->safety_factor = parse_real(v); }},
       }},
      {"output",
       {
           {"format",
            [](Scenario &s, const std::string &v) {
              if (v == "csv")
                s.format = OutputFormat::csv;
              else if (v == "json")
                s.format = OutputFormat::json;
              else
                throw ConfigError("format must be csv or json, got '" + v + "'");
            }},
       }},
  };
  return table;
}

std::string join(const std::vector<double> &values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += ", ";
    out += format_double(values[i]);
  }
  return out;
}

} // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

void Scenario::validate() const {
  if (chain.n_atoms < 1)
    throw ConfigError("chain.n_atoms: must be >= 1");
  if (!(chain.spacing_over_lambda > 0.0))
    throw ConfigError("chain.spacing_over_lambda: must be > 0");
  if (detectors.placement == Placement::explicit_phases) {
    if (detectors.phases.size() != chain.n_atoms)
      throw ConfigError("detectors.phases: " + std::to_string(detectors.phases.size()) +
                        " phases given for " + std::to_string(chain.n_atoms) + " atoms");
    if (detectors.delta2 == Delta2Mode::fixed &&
        (chain.n_atoms < 2 || !detectors.phases[1].has_value()))
      throw ConfigError("detectors.delta2: fixed mode needs a numeric phase for detector 2");
  } else if (!detectors.phases.empty()) {
    throw ConfigError("detectors.phases: only allowed with placement = explicit");
  }
  if (grid.points < 2 || grid.points2 < 2)
    throw ConfigError("grid.points: need at least 2 points per axis");
  if (!(grid.delta1_max > grid.delta1_min) || !(grid.delta2_max > grid.delta2_min))
    throw ConfigError("grid: axis maximum must exceed minimum");
  if (noise) {
    if (noise->sigmas.empty())
      throw ConfigError("noise.sigmas: list is empty");
    for (double s : noise->sigmas)
      if (s < 0.0)
        throw ConfigError("noise.sigmas: values must be >= 0");
    if (noise->samples < 1)
      throw ConfigError("noise.samples: must be >= 1");
  }
  if (sampler && (sampler->events < 1 || sampler->bins < 1))
    throw ConfigError("sampler: events and bins must be >= 1");
}

Scenario parse_scenario(const std::string &text) {
  Scenario s;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::set<std::pair<std::string, std::string>> seen;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty())
      continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(where + "malformed section header '" + line + "'");
      section = trim(line.substr(1, line.size() - 2));
      if (!schema().contains(section))
        throw ConfigError(where + "unknown section [" + section + "]");
      if (section == "noise" && !s.noise)
        s.noise.emplace();
      if (section == "sampler" && !s.sampler)
        s.sampler.emplace();
      if (section == "feasibility" && !s.feasibility)
        s.feasibility.emplace();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(where + "expected key = value");
    if (section.empty())
      throw ConfigError(where + "key outside of any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto &keys = schema().at(section);
    const auto it = keys.find(key);
    if (it == keys.end())
      throw ConfigError(where + "unknown key '" + key + "' in [" + section + "]");
    if (!seen.emplace(section, key).second)
      throw ConfigError(where + "duplicate key '" + key + "' in [" + section + "]");
    try {
      it->second(s, value);
    } catch (const ConfigError &e) {
      throw ConfigError(where + section + "." + key + ": " + e.what());
    }
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario &s) {
  std::ostringstream out;
  out << "[chain]\n"
      << "n_atoms = " << s.chain.n_atoms << "\n"
      << "spacing_over_lambda = " << format_double(s.chain.spacing_over_lambda) << "\n\n";

  out << "[detectors]\n"
      << "placement = " << (s.detectors.placement == Placement::magic ? "magic" : "explicit")
      << "\n";
  if (!s.detectors.phases.empty()) {
    out << "phases = ";
    for (std::size_t i = 0; i < s.detectors.phases.size(); ++i) {
      if (i)
        out << ", ";
      out << (s.detectors.phases[i] ? format_double(*s.detectors.phases[i]) : "*");
    }
    out << "\n";
  }
  const char *mode = s.detectors.delta2 == Delta2Mode::anti    ? "anti"
                     : s.detectors.delta2 == Delta2Mode::equal ? "equal"
                                                               : "fixed";
  out << "delta2 = " << mode << "\n\n";

  out << "[grid]\n"
      << "delta1_min = " << format_double(s.grid.delta1_min) << "\n"
      << "delta1_max = " << format_double(s.grid.delta1_max) << "\n"
      << "points = " << s.grid.points << "\n"
      << "delta2_min = " << format_double(s.grid.delta2_min) << "\n"
      << "delta2_max = " << format_double(s.grid.delta2_max) << "\n"
      << "points2 = " << s.grid.points2 << "\n\n";

  if (s.noise)
    out << "[noise]\n"
        << "sigmas = " << join(s.noise->sigmas) << "\n"
        << "samples = " << s.noise->samples << "\n"
        << "seed = " << s.noise->seed << "\n\n";
  if (s.sampler)
    out << "[sampler]\n"
        << "events = " << s.sampler->events << "\n"
        << "bins = " << s.sampler->bins << "\n"
        << "seed = " << s.sampler->seed << "\n\n";
  if (s.feasibility) {
    const auto &p = s.feasibility->params;
    out << "[feasibility]\n"
        << "detector_size = " << format_double(p.detector_size) << "\n"
        << "theta = " << format_double(p.theta) << "\n"
        << "delta_theta = " << format_double(p.delta_theta) << "\n"
        << "d = " << format_double(p.d) << "\n"
        << "delta_d = " << format_double(p.delta_d) << "\n"
        << "lambda = " << format_double(p.lambda) << "\n"
        << "delta_k_rel = " << format_double(p.delta_k_rel) << "\n"
        << "safety_factor = " << format_double(s.feasibility->safety_factor) << "\n\n";
  }
  out << "[output]\n"
      << "format = " << (s.format == OutputFormat::csv ? "csv" : "json") << "\n";
  return out.str();
}

} // namespace photocorr
