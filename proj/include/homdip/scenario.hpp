#pragma once

#include <string>

#include "homdip/jsa.hpp"
#include "homdip/spectra.hpp"

namespace homdip {

// Scenario documents are flat "key = value" text with '#' comments.  The set
// of accepted keys is gated by `kind`; unknown or inapplicable keys are
// rejected.  Missing keys fall back to kind-specific defaults, which parsing
// resolves into the returned struct, so serialize() always emits a complete
// document.

enum class ScenarioKind {
  fock,
  separable,
  entangled_pulsed,
  entangled_cw,
  mixed_independent,
};

const char* kind_name(ScenarioKind kind);

struct SweepSpec {
  double tau_min = 0.0;  // s
  double tau_max = 0.0;  // s
  int n_tau = 0;
  bool operator==(const SweepSpec&) const = default;
};

// n_points per frequency axis; span in characteristic widths of the spectrum
// (sigma for gaussian shapes, 1/scale for sinc, pump sigma for a pulsed JSA).
struct GridSpec {
  int n_points = 0;
  double span = 0.0;
  bool operator==(const GridSpec&) const = default;
};

struct FockParams {
  double eta = 0.5;
  std::string tag_a = "H";
  std::string tag_b = "V";
  bool operator==(const FockParams&) const = default;
};

struct SeparableParams {
  SpectralShape shape = SpectralShape::gaussian;
  double sigma_a = 0.0, sigma_b = 0.0;    // gaussian
  double scale_a = 0.0, scale_b = 0.0;    // sinc
  double center_a = 0.0, center_b = 0.0;  // gaussian, sinc
  std::string file_a, file_b;             // tabulated
  bool operator==(const SeparableParams&) const = default;
};

// Pulsed SPDC source (shared by entangled_pulsed and mixed_independent).
struct SpdcParams {
  PmShape pm_shape = PmShape::gaussian;
  double center = 0.0;      // rad/s, degenerate photon frequency
  double pump_sigma = 0.0;  // rad/s
  double pm_a = 0.0, pm_b = 0.0;  // s
  double pm_c = 0.0;
  double gamma = 0.193;  // gaussian phase matching only
  double schmidt_tol = 1e-6;
  bool operator==(const SpdcParams&) const = default;
};

struct CwParams {
  PmShape pm_shape = PmShape::gaussian;
  double center = 0.0;  // rad/s
  double pm_a = 0.0, pm_b = 0.0;  // s
  double pm_c = 0.0;
  double gamma = 0.193;
  bool operator==(const CwParams&) const = default;
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::separable;
  FockParams fock;
  SeparableParams separable;
  SpdcParams spdc;
  CwParams cw;
  SweepSpec sweep;
  GridSpec grid;
  bool operator==(const Scenario&) const = default;
};

// Throws ScenarioError with line/key diagnostics on malformed documents,
// unknown keys, or invalid values.
Scenario parse_scenario(const std::string& text);

// Reads a scenario file; relative tabulated-data paths are resolved against
// the scenario file's directory.
Scenario load_scenario(const std::string& path);

// Canonical document; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

// One-line human description used for plot titles and summaries.
std::string scenario_descriptor(const Scenario& s);

}  // namespace homdip
