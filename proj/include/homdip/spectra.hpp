#pragma once

#include <string>

#include "homdip/freqgrid.hpp"

namespace homdip {

// Unnormalized sinc: sin(x)/x with sinc(0) = 1.
double sinc(double x);

enum class SpectralShape { gaussian, sinc, tabulated };

// Single-photon spectral amplitude phi(omega) with unit L2 norm.
//   gaussian:  pi^(-1/4) sigma^(-1/2) exp(-(w - center)^2 / (2 sigma^2))
//   sinc:      sqrt(scale/pi) sinc(scale * (w - center))
//   tabulated: user-supplied samples, interpolated linearly, zero outside.
struct SpectralAmplitude {
  SpectralShape shape = SpectralShape::gaussian;
  double center = 0.0;  // rad/s (gaussian, sinc)
  double sigma = 0.0;   // rad/s (gaussian)
  double scale = 0.0;   // s     (sinc)
  ComplexSamples table;  // tabulated only, normalized on its own grid
};

SpectralAmplitude gaussian_amplitude(double center, double sigma);
SpectralAmplitude sinc_amplitude(double center, double scale);
SpectralAmplitude tabulated_amplitude(ComplexSamples table);

// Text format: one sample per line, "omega value_re [value_im]", '#' comments.
// Omegas must be uniformly spaced and increasing.
SpectralAmplitude load_amplitude(const std::string& path);

std::complex<double> evaluate(const SpectralAmplitude& sa, double omega);

// Characteristic center/width used for grid sizing and coverage checks
// (sigma for gaussian, 1/scale for sinc, rms statistics for tabulated).
double amplitude_center(const SpectralAmplitude& sa);
double amplitude_width(const SpectralAmplitude& sa);

// Tabulate on a grid and renormalize to unit discrete norm.  Warns when the
// grid covers less than +-6 widths or when the raw norm is off by > 1e-3
// (truncated tails); throws std::invalid_argument if all samples vanish.
ComplexSamples sample(const SpectralAmplitude& sa, const FrequencyGrid& grid);

// Closed-form coincidence dips for a balanced beam splitter.
double gaussian_dip_closed_form(double sigma_a, double sigma_b, double wbar_a,
                                double wbar_b, double tau);
double sinc_dip_closed_form(double A, double tau);

}  // namespace homdip
