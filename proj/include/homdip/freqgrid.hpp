#pragma once

#include <complex>
#include <vector>

#include "homdip/errors.hpp"

namespace homdip {

// Uniform angular-frequency grid [omega_min, omega_max] with n_points nodes.
// All integrals in this library are composite trapezoid sums on such grids.
struct FrequencyGrid {
  double omega_min = 0.0;
  double omega_max = 0.0;
  int n_points = 0;

  double spacing() const { return (omega_max - omega_min) / (n_points - 1); }
  double point(int i) const { return omega_min + i * spacing(); }
  std::vector<double> points() const;

  bool operator==(const FrequencyGrid&) const = default;
};

// A complex function tabulated on a FrequencyGrid.
struct ComplexSamples {
  FrequencyGrid grid;
  std::vector<std::complex<double>> values;
};

// Largest spacing*|tau| product accepted by fourier_integral before the
// oscillatory kernel is considered undersampled.
inline constexpr double kAliasingLimit = 0.78539816339744831;  // pi/4

FrequencyGrid make_grid(double omega_min, double omega_max, int n_points);

// Trapezoid estimate of the integral of f over [omega_min, omega_max].
std::complex<double> integrate(const ComplexSamples& samples);

// Trapezoid estimate of integral f(w) exp(i*sign*w*tau) dw.  Throws
// AliasingError when spacing*|tau| >= pi/4.
std::complex<double> fourier_integral(const ComplexSamples& samples, double tau,
                                      int sign);

}  // namespace homdip
