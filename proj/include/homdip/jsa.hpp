#pragma once

#include <Eigen/Dense>
#include <string>

#include "homdip/freqgrid.hpp"
#include "homdip/spectra.hpp"

namespace homdip {

enum class PmShape { sinc, gaussian };

// Crystal phase-matching factor of an SPDC joint amplitude:
//   sinc:     sinc(A w1 + B w2 - C)
//   gaussian: exp(-gamma (A w1 + B w2 - C)^2)
// gamma = 0.193 makes the gaussian's amplitude half-maximum width match the
// sinc's.
struct PhaseMatching {
  PmShape shape = PmShape::gaussian;
  double A = 0.0;      // s
  double B = 0.0;      // s
  double C = 0.0;      // dimensionless
  double gamma = 0.193;
};

// Pump spectral envelope alpha evaluated at w1 + w2.  For a pulsed pump,
// alpha(w) = exp(-(w - 2*center)^2 / (2 sigma^2)): "center" is the degenerate
// photon frequency, so the pump carrier sits at twice that.  A cw pump is an
// energy-conservation delta handled analytically via build_cw_marginal.
struct PumpEnvelope {
  enum class Kind { pulsed, cw };
  Kind kind = Kind::pulsed;
  double center = 0.0;  // rad/s, per-photon degenerate frequency
  double sigma = 0.0;   // rad/s, pulsed only

  static PumpEnvelope pulsed(double center, double sigma);
  static PumpEnvelope cw(double center);
};

// First-order dispersion data for a crystal of length L.
struct DispersionParams {
  double L = 0.0;         // m
  double k_p0 = 0.0;      // 1/m
  double k_10 = 0.0;      // 1/m
  double k_20 = 0.0;      // 1/m
  double kp_prime = 0.0;  // s/m
  double k1_prime = 0.0;  // s/m
  double k2_prime = 0.0;  // s/m
  double omega_bar = 0.0; // rad/s
};

struct Abc {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

// Two-photon joint spectral amplitude sampled on a grid pair, normalized so
// that sum |f_ij|^2 dw1 dw2 = 1 (rectangle rule).
struct JointSpectralAmplitude {
  FrequencyGrid grid1;
  FrequencyGrid grid2;
  Eigen::MatrixXcd values;  // n1 x n2
};

// 1-D marginal g(nu) of a cw-pumped source over detuning nu = w - omega_bar,
// normalized to unit trapezoid norm: g(nu) proportional to
// PhaseMatching(omega_bar - nu, omega_bar + nu).
struct CwMarginal {
  ComplexSamples g;  // over detuning, grid symmetric about 0
  double omega_bar = 0.0;
};

Abc abc_from_dispersion(const DispersionParams& d);

double phase_matching_eval(const PhaseMatching& pm, double omega1, double omega2);

// Rectangle-rule norm sum |f|^2 dw1 dw2.
double jsa_norm(const JointSpectralAmplitude& jsa);

// Normalized PhaseMatching x pulsed-pump product on the grid pair; throws
// std::invalid_argument when the product vanishes everywhere.
JointSpectralAmplitude build_jsa(const PhaseMatching& pm, const PumpEnvelope& pump,
                                 const FrequencyGrid& grid1,
                                 const FrequencyGrid& grid2);

// Separable product phi(w1) varphi(w2), normalized.
JointSpectralAmplitude jsa_from_product(const SpectralAmplitude& phi,
                                        const SpectralAmplitude& varphi,
                                        const FrequencyGrid& grid1,
                                        const FrequencyGrid& grid2);

// Adopt raw samples as a JSA, normalizing them.
JointSpectralAmplitude jsa_from_samples(const FrequencyGrid& grid1,
                                        const FrequencyGrid& grid2,
                                        Eigen::MatrixXcd values);

CwMarginal build_cw_marginal(const PhaseMatching& pm, double omega_bar,
                             const FrequencyGrid& grid);

// Text export: header "# jsa n1 n2 omega1_min omega1_max omega2_min omega2_max"
// followed by row-major "re im" lines.
void write_jsa(const JointSpectralAmplitude& jsa, const std::string& path);
JointSpectralAmplitude read_jsa(const std::string& path);

}  // namespace homdip
