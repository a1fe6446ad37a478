#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homdip/jsa.hpp"
#include "homdip/schmidt.hpp"
#include "homdip/spectra.hpp"

namespace homdip {

// Slack around the mathematical range [0, 1/2] tolerated before an engine
// throws ContractViolation; results are returned raw, never clamped.
inline constexpr double kProbabilitySlack = 1e-6;
// Largest imaginary residue tolerated where the theory guarantees a real value.
inline constexpr double kRealnessTol = 1e-8;

// Coincidence probability samples over a strictly increasing tau grid.
struct DipCurve {
  std::vector<double> taus;
  std::vector<double> probabilities;
  std::string scenario_descriptor;
};

// V = (p_max - p_min)/p_max with p_max estimated from the outer samples of
// the curve rather than assumed to be 1/2.
struct Visibility {
  double p_max = 0.0;
  double p_min = 0.0;
  double value = 0.0;
};

// All engines model a balanced (eta = 1/2) beam splitter; general eta lives
// in the discrete-mode algebra (fock.hpp).

// Pure photons with spectral amplitudes phi, varphi and relative delay tau:
// p = 1/2 - 1/2 |J|^2, J = integral conj(phi) varphi exp(-i w tau) dw.
double p_separable(const ComplexSamples& phi, const ComplexSamples& varphi,
                   double tau);
double p_separable(const SpectralAmplitude& phi, const SpectralAmplitude& varphi,
                   double tau, const FrequencyGrid& grid);

// Two-photon state with joint amplitude f (grids must be identical):
// p = 1/2 - 1/2 integral conj(f(w1,w2)) f(w2,w1) exp(i (w2-w1) tau).
double p_entangled(const JointSpectralAmplitude& jsa, double tau);

// Same quantity from a Schmidt decomposition of the JSA.
double p_entangled_schmidt(const SchmidtDecomposition& decomp, double tau);

// cw-pumped source via its 1-D marginal (detuning grid symmetric about 0):
// p = 1/2 - 1/2 integral conj(g(-nu)) g(nu) exp(i 2 nu tau) dnu.
double p_cw(const CwMarginal& marginal, double tau);

// Independent photons drawn from two spectral ensembles:
// p = 1/2 - 1/2 sum_kk' q_k q'_k' |integral conj(phi_k) varphi_k' e^(-i w tau)|^2.
double p_mixed(const SpectralEnsemble& ens_a, const SpectralEnsemble& ens_b,
               double tau);

// Evaluate an engine over a uniform tau grid built symmetrically from both
// window ends, so that -tau lands exactly on a node whenever the window is
// symmetric.
DipCurve dip_curve(const std::function<double(double)>& engine,
                   const std::string& descriptor, double tau_min, double tau_max,
                   int n_tau);

// p_min is the sample minimum; p_max averages the outer 5% of samples at each
// end.  Warns when the estimate sits more than 1e-2 away from 1/2.
Visibility visibility(const DipCurve& curve);

}  // namespace homdip
