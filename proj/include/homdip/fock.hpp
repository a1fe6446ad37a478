#pragma once

#include <compare>
#include <complex>
#include <string>
#include <vector>

namespace homdip {

enum class Port { a, b };

// A creation operator for one photon: output port plus an opaque tag for every
// other degree of freedom (polarization, arrival path, ...).  Equal tags mean
// indistinguishable apart from the port.
struct ModeLabel {
  Port port;
  std::string tag;
  auto operator<=>(const ModeLabel&) const = default;
};

// Product of creation operators acting on vacuum, times a complex amplitude.
struct OperatorString {
  std::vector<ModeLabel> factors;
  std::complex<double> amplitude;
};

// Sum of operator strings in canonical order (factors sorted, like terms
// merged, exact zeros removed).
struct FockState {
  std::vector<OperatorString> terms;
};

// Two photons entering ports a and b with the given tags, amplitude 1.
FockState input_state(const std::string& tag_a, const std::string& tag_b);

// Beam splitter of reflectivity eta in [0, 1]:
//   a+ -> sqrt(1-eta) a+ + sqrt(eta) b+
//   b+ -> sqrt(eta) a+ - sqrt(1-eta) b+
FockState apply_beamsplitter(const FockState& state, double eta);

// <psi|psi>, accounting for the n! factor of repeated identical operators.
double state_norm(const FockState& state);

// Probability of finding exactly one photon in each output port.
double coincidence_probability(const FockState& state);

}  // namespace homdip
