#include "homdip/fock.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace homdip {

namespace {

FockState canonicalize(std::vector<OperatorString> terms) {
  std::map<std::vector<ModeLabel>, std::complex<double>> merged;
  for (auto& t : terms) {
    std::sort(t.factors.begin(), t.factors.end());
    merged[t.factors] += t.amplitude;
  }
  FockState out;
  for (auto& [factors, amp] : merged)
    if (amp != std::complex<double>(0.0, 0.0))
      out.terms.push_back({factors, amp});
  return out;
}

// n! over groups of repeated identical factors; 2 photons -> 1 or 2
double multiplicity(const std::vector<ModeLabel>& factors) {
  double m = 1.0;
  int run = 1;
  for (size_t i = 1; i < factors.size(); ++i) {
    if (factors[i] == factors[i - 1])
      m *= ++run;
    else
      run = 1;
  }
  return m;
}

}  // namespace

FockState input_state(const std::string& tag_a, const std::string& tag_b) {
  OperatorString t;
  t.factors = {ModeLabel{Port::a, tag_a}, ModeLabel{Port::b, tag_b}};
  t.amplitude = 1.0;
  return canonicalize({t});
}

FockState apply_beamsplitter(const FockState& state, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::invalid_argument("apply_beamsplitter: eta must lie in [0, 1]");
  const double r = std::sqrt(eta);
  const double t = std::sqrt(1.0 - eta);
  std::vector<OperatorString> expanded;
  for (const auto& term : state.terms) {
    // each factor maps to a two-term sum; expand the product
    std::vector<OperatorString> partial = {{{}, term.amplitude}};
    for (const auto& f : term.factors) {
      // a+ -> t a+ + r b+ ; b+ -> r a+ - t b+
      const ModeLabel into_a{Port::a, f.tag};
      const ModeLabel into_b{Port::b, f.tag};
      const std::complex<double> ca = (f.port == Port::a) ? t : r;
      const std::complex<double> cb = (f.port == Port::a) ? r : -t;
      std::vector<OperatorString> next;
      next.reserve(partial.size() * 2);
      for (const auto& p : partial) {
        OperatorString pa = p;
        pa.factors.push_back(into_a);
        pa.amplitude *= ca;
        next.push_back(std::move(pa));
        OperatorString pb = p;
        pb.factors.push_back(into_b);
        pb.amplitude *= cb;
        next.push_back(std::move(pb));
      }
      partial = std::move(next);
    }
    for (auto& p : partial) expanded.push_back(std::move(p));
  }
  return canonicalize(std::move(expanded));
}

double state_norm(const FockState& state) {
  double n = 0.0;
  for (const auto& t : state.terms)
    n += std::norm(t.amplitude) * multiplicity(t.factors);
  return n;
}

double coincidence_probability(const FockState& state) {
  double p = 0.0;
  for (const auto& t : state.terms) {
    if (t.factors.size() != 2)
      throw std::invalid_argument(
          "coincidence_probability: expected a two-photon state");
    int in_a = 0;
    for (const auto& f : t.factors)
      if (f.port == Port::a) ++in_a;
    if (in_a == 1) p += std::norm(t.amplitude);
  }
  return p;
}

}  // namespace homdip
