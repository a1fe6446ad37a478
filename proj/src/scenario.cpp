#include "homdip/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace homdip {

namespace {

constexpr double kDefaultSigma = 1e12;   // rad/s
constexpr double kDefaultCenter = 1e15;  // rad/s
constexpr double kDefaultGamma = 0.193;
constexpr int kDefaultNTau = 201;

// sinc scale whose dip width matches a gaussian of width sigma
double matched_scale(double sigma, double gamma) {
  return 1.0 / (sigma * std::sqrt(2.0 * gamma));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct KvMap {
  std::map<std::string, std::string> items;

  bool has(const std::string& key) const { return items.count(key) != 0; }

  std::string take(const std::string& key, const std::string& fallback) {
    auto it = items.find(key);
    if (it == items.end()) return fallback;
    std::string v = it->second;
    items.erase(it);
    return v;
  }

  std::string require(const std::string& key) {
    auto it = items.find(key);
    if (it == items.end())
      throw ScenarioError("scenario: missing required key '" + key + "'");
    std::string v = it->second;
    items.erase(it);
    return v;
  }
};

KvMap tokenize(const std::string& text) {
  KvMap kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioError("scenario: line " + std::to_string(lineno) +
                          ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ScenarioError("scenario: line " + std::to_string(lineno) +
                          ": empty key or value");
    for (char c : key)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw ScenarioError("scenario: line " + std::to_string(lineno) +
                            ": bad key '" + key + "'");
    if (kv.items.count(key))
      throw ScenarioError("scenario: line " + std::to_string(lineno) +
                          ": duplicate key '" + key + "'");
    kv.items[key] = value;
  }
  return kv;
}

double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || !std::isfinite(x))
    throw ScenarioError("scenario: key '" + key + "': bad number '" + value + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const long x = std::strtol(value.c_str(), &end, 10);
  if (end != value.c_str() + value.size() || x < INT_MIN || x > INT_MAX)
    throw ScenarioError("scenario: key '" + key + "': bad integer '" + value + "'");
  return static_cast<int>(x);
}

double take_double(KvMap& kv, const std::string& key, double fallback) {
  if (!kv.has(key)) return fallback;
  return parse_double(key, kv.require(key));
}

int take_int(KvMap& kv, const std::string& key, int fallback) {
  if (!kv.has(key)) return fallback;
  return parse_int(key, kv.require(key));
}

double require_positive(const std::string& key, double x) {
  if (!(x > 0.0))
    throw ScenarioError("scenario: key '" + key + "' must be positive");
  return x;
}

PmShape parse_pm_shape(const std::string& value) {
  if (value == "sinc") return PmShape::sinc;
  if (value == "gaussian") return PmShape::gaussian;
  throw ScenarioError("scenario: pm_shape must be 'sinc' or 'gaussian', got '" +
                      value + "'");
}

void take_sweep(KvMap& kv, SweepSpec& sweep, double default_tau_max,
                bool require_tau_max = false) {
  if (require_tau_max && !kv.has("tau_max"))
    throw ScenarioError(
        "scenario: tabulated scenarios must set tau_max explicitly");
  sweep.tau_max = take_double(kv, "tau_max", default_tau_max);
  sweep.tau_min = take_double(kv, "tau_min", -sweep.tau_max);
  sweep.n_tau = take_int(kv, "n_tau", kDefaultNTau);
  if (!(sweep.tau_max > sweep.tau_min))
    throw ScenarioError("scenario: tau_max must exceed tau_min");
  if (sweep.n_tau < 2) throw ScenarioError("scenario: n_tau must be >= 2");
}

void take_grid(KvMap& kv, GridSpec& grid, int default_n, double default_span) {
  grid.n_points = take_int(kv, "n_points", default_n);
  grid.span = take_double(kv, "grid_span", default_span);
  if (grid.n_points < 3) throw ScenarioError("scenario: n_points must be >= 3");
  if (!(grid.span > 0.0)) throw ScenarioError("scenario: grid_span must be positive");
}

// pulsed SPDC keys, shared by entangled_pulsed and mixed_independent
void take_spdc(KvMap& kv, SpdcParams& p, bool with_schmidt_tol) {
  p.pm_shape = parse_pm_shape(kv.take("pm_shape", "gaussian"));
  p.center = take_double(kv, "center", kDefaultCenter);
  p.pump_sigma =
      require_positive("pump_sigma", take_double(kv, "pump_sigma", kDefaultSigma));
  if (p.pm_shape == PmShape::gaussian)
    p.gamma = require_positive("gamma", take_double(kv, "gamma", kDefaultGamma));
  else
    p.gamma = kDefaultGamma;
  p.pm_a = take_double(kv, "pm_a", matched_scale(p.pump_sigma, p.gamma));
  p.pm_b = take_double(kv, "pm_b", -p.pm_a);
  p.pm_c = take_double(kv, "pm_c", 0.0);
  if (with_schmidt_tol) {
    p.schmidt_tol = take_double(kv, "schmidt_tol", 1e-6);
    if (!(p.schmidt_tol >= 0.0 && p.schmidt_tol < 1.0))
      throw ScenarioError("scenario: schmidt_tol must lie in [0, 1)");
  }
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// canonical key/value list for everything except `kind`
std::vector<std::pair<std::string, std::string>> scenario_items(const Scenario& s) {
  std::vector<std::pair<std::string, std::string>> out;
  auto add = [&out](const std::string& k, const std::string& v) {
    out.emplace_back(k, v);
  };
  auto add_sweep_grid = [&] {
    add("tau_min", fmt(s.sweep.tau_min));
    add("tau_max", fmt(s.sweep.tau_max));
    add("n_tau", std::to_string(s.sweep.n_tau));
    add("n_points", std::to_string(s.grid.n_points));
    add("grid_span", fmt(s.grid.span));
  };
  switch (s.kind) {
    case ScenarioKind::fock:
      add("eta", fmt(s.fock.eta));
      add("tag_a", s.fock.tag_a);
      add("tag_b", s.fock.tag_b);
      break;
    case ScenarioKind::separable:
      switch (s.separable.shape) {
        case SpectralShape::gaussian:
          add("shape", "gaussian");
          add("sigma_a", fmt(s.separable.sigma_a));
          add("sigma_b", fmt(s.separable.sigma_b));
          add("center_a", fmt(s.separable.center_a));
          add("center_b", fmt(s.separable.center_b));
          break;
        case SpectralShape::sinc:
          add("shape", "sinc");
          add("scale_a", fmt(s.separable.scale_a));
          add("scale_b", fmt(s.separable.scale_b));
          add("center_a", fmt(s.separable.center_a));
          add("center_b", fmt(s.separable.center_b));
          break;
        case SpectralShape::tabulated:
          add("shape", "tabulated");
          add("file_a", s.separable.file_a);
          add("file_b", s.separable.file_b);
          break;
      }
      add_sweep_grid();
      break;
    case ScenarioKind::entangled_pulsed:
    case ScenarioKind::mixed_independent:
      add("pm_shape", s.spdc.pm_shape == PmShape::sinc ? "sinc" : "gaussian");
      add("center", fmt(s.spdc.center));
      add("pump_sigma", fmt(s.spdc.pump_sigma));
      add("pm_a", fmt(s.spdc.pm_a));
      add("pm_b", fmt(s.spdc.pm_b));
      add("pm_c", fmt(s.spdc.pm_c));
      if (s.spdc.pm_shape == PmShape::gaussian) add("gamma", fmt(s.spdc.gamma));
      add("schmidt_tol", fmt(s.spdc.schmidt_tol));
      add_sweep_grid();
      break;
    case ScenarioKind::entangled_cw:
      add("pm_shape", s.cw.pm_shape == PmShape::sinc ? "sinc" : "gaussian");
      add("center", fmt(s.cw.center));
      add("pm_a", fmt(s.cw.pm_a));
      add("pm_b", fmt(s.cw.pm_b));
      add("pm_c", fmt(s.cw.pm_c));
      if (s.cw.pm_shape == PmShape::gaussian) add("gamma", fmt(s.cw.gamma));
      add_sweep_grid();
      break;
  }
  return out;
}

}  // namespace

const char* kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::fock: return "fock";
    case ScenarioKind::separable: return "separable";
    case ScenarioKind::entangled_pulsed: return "entangled_pulsed";
    case ScenarioKind::entangled_cw: return "entangled_cw";
    case ScenarioKind::mixed_independent: return "mixed_independent";
  }
  return "?";
}

Scenario parse_scenario(const std::string& text) {
  KvMap kv = tokenize(text);
  Scenario s;
  const std::string kind = kv.require("kind");
  if (kind == "fock") {
    s.kind = ScenarioKind::fock;
    s.fock.eta = take_double(kv, "eta", 0.5);
    if (!(s.fock.eta >= 0.0 && s.fock.eta <= 1.0))
      throw ScenarioError("scenario: eta must lie in [0, 1]");
    s.fock.tag_a = kv.take("tag_a", "H");
    s.fock.tag_b = kv.take("tag_b", "V");
  } else if (kind == "separable") {
    s.kind = ScenarioKind::separable;
    const std::string shape = kv.take("shape", "gaussian");
    if (shape == "gaussian") {
      s.separable.shape = SpectralShape::gaussian;
      s.separable.sigma_a =
          require_positive("sigma_a", take_double(kv, "sigma_a", kDefaultSigma));
      s.separable.sigma_b = require_positive(
          "sigma_b", take_double(kv, "sigma_b", s.separable.sigma_a));
      s.separable.center_a = take_double(kv, "center_a", kDefaultCenter);
      s.separable.center_b = take_double(kv, "center_b", s.separable.center_a);
      take_sweep(kv, s.sweep,
                 10.0 / std::min(s.separable.sigma_a, s.separable.sigma_b));
    } else if (shape == "sinc") {
      s.separable.shape = SpectralShape::sinc;
      s.separable.scale_a = require_positive(
          "scale_a",
          take_double(kv, "scale_a", matched_scale(kDefaultSigma, kDefaultGamma)));
      s.separable.scale_b = require_positive(
          "scale_b", take_double(kv, "scale_b", s.separable.scale_a));
      s.separable.center_a = take_double(kv, "center_a", kDefaultCenter);
      s.separable.center_b = take_double(kv, "center_b", s.separable.center_a);
      take_sweep(kv, s.sweep,
                 4.0 * std::max(s.separable.scale_a, s.separable.scale_b));
    } else if (shape == "tabulated") {
      s.separable.shape = SpectralShape::tabulated;
      s.separable.file_a = kv.require("file_a");
      s.separable.file_b = kv.require("file_b");
      take_sweep(kv, s.sweep, 0.0, /*require_tau_max=*/true);
    } else {
      throw ScenarioError(
          "scenario: shape must be 'gaussian', 'sinc' or 'tabulated', got '" +
          shape + "'");
    }
    take_grid(kv, s.grid, 2048, 8.0);
  } else if (kind == "entangled_pulsed" || kind == "mixed_independent") {
    s.kind = kind == "entangled_pulsed" ? ScenarioKind::entangled_pulsed
                                        : ScenarioKind::mixed_independent;
    take_spdc(kv, s.spdc, /*with_schmidt_tol=*/true);
    take_sweep(kv, s.sweep, 10.0 / s.spdc.pump_sigma);
    take_grid(kv, s.grid, 512, 5.0);
  } else if (kind == "entangled_cw") {
    s.kind = ScenarioKind::entangled_cw;
    s.cw.pm_shape = parse_pm_shape(kv.take("pm_shape", "gaussian"));
    s.cw.center = take_double(kv, "center", kDefaultCenter);
    if (s.cw.pm_shape == PmShape::gaussian)
      s.cw.gamma = require_positive("gamma", take_double(kv, "gamma", kDefaultGamma));
    else
      s.cw.gamma = kDefaultGamma;
    s.cw.pm_a = take_double(kv, "pm_a", matched_scale(kDefaultSigma, s.cw.gamma));
    s.cw.pm_b = take_double(kv, "pm_b", -s.cw.pm_a);
    s.cw.pm_c = take_double(kv, "pm_c", 0.0);
    if (s.cw.pm_a == s.cw.pm_b)
      throw ScenarioError(
          "scenario: cw marginal needs pm_a != pm_b (detuning dependence)");
    take_sweep(kv, s.sweep, 3.0 * std::abs(s.cw.pm_b - s.cw.pm_a));
    take_grid(kv, s.grid, 4097, 8.0);
  } else {
    throw ScenarioError("scenario: unknown kind '" + kind + "'");
  }
  if (!kv.items.empty())
    throw ScenarioError("scenario: unknown key '" + kv.items.begin()->first +
                        "' for kind '" + kind + "'");
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("scenario: cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  Scenario s = parse_scenario(text.str());
  // tabulated data files are looked up next to the scenario file
  const auto base = std::filesystem::path(path).parent_path();
  auto resolve = [&base](std::string& file) {
    if (!file.empty() && std::filesystem::path(file).is_relative())
      file = (base / file).string();
  };
  resolve(s.separable.file_a);
  resolve(s.separable.file_b);
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "kind = " << kind_name(s.kind) << "\n";
  for (const auto& [k, v] : scenario_items(s)) out << k << " = " << v << "\n";
  return out.str();
}

std::string scenario_descriptor(const Scenario& s) {
  switch (s.kind) {
    case ScenarioKind::fock: {
      char buf[96];
      std::snprintf(buf, sizeof buf, "two-photon beam splitter, eta = %g, tags %s/%s",
                    s.fock.eta, s.fock.tag_a.c_str(), s.fock.tag_b.c_str());
      return buf;
    }
    case ScenarioKind::separable:
      switch (s.separable.shape) {
        case SpectralShape::gaussian: return "separable gaussian photons";
        case SpectralShape::sinc: return "separable sinc photons";
        case SpectralShape::tabulated: return "separable tabulated photons";
      }
      return "separable photons";
    case ScenarioKind::entangled_pulsed:
      return s.spdc.pm_shape == PmShape::sinc
                 ? "pulsed SPDC pair, sinc phase matching"
                 : "pulsed SPDC pair, gaussian phase matching";
    case ScenarioKind::entangled_cw:
      return s.cw.pm_shape == PmShape::sinc ? "cw SPDC pair, sinc phase matching"
                                            : "cw SPDC pair, gaussian phase matching";
    case ScenarioKind::mixed_independent:
      return s.spdc.pm_shape == PmShape::sinc
                 ? "independent SPDC sources, sinc phase matching"
                 : "independent SPDC sources, gaussian phase matching";
  }
  return "scenario";
}

}  // namespace homdip
