#include "homdip/freqgrid.hpp"

#include <cmath>
#include <string>

namespace homdip {

std::vector<double> FrequencyGrid::points() const {
  std::vector<double> p(n_points);
  for (int i = 0; i < n_points; ++i) p[i] = point(i);
  return p;
}

FrequencyGrid make_grid(double omega_min, double omega_max, int n_points) {
  if (!(omega_max > omega_min))
    throw std::invalid_argument("make_grid: omega_max must exceed omega_min");
  if (n_points < 3)
    throw std::invalid_argument("make_grid: n_points must be at least 3");
  if (!std::isfinite(omega_min) || !std::isfinite(omega_max))
    throw std::invalid_argument("make_grid: bounds must be finite");
  return FrequencyGrid{omega_min, omega_max, n_points};
}

static void check_samples(const ComplexSamples& samples) {
  if (samples.grid.n_points < 3 ||
      static_cast<int>(samples.values.size()) != samples.grid.n_points)
    throw std::invalid_argument("samples length does not match grid");
}

std::complex<double> integrate(const ComplexSamples& samples) {
  check_samples(samples);
  const int n = samples.grid.n_points;
  std::complex<double> acc = 0.5 * (samples.values[0] + samples.values[n - 1]);
  for (int i = 1; i < n - 1; ++i) acc += samples.values[i];
  return acc * samples.grid.spacing();
}

std::complex<double> fourier_integral(const ComplexSamples& samples, double tau,
                                      int sign) {
  check_samples(samples);
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("fourier_integral: sign must be +1 or -1");
  const double h = samples.grid.spacing();
  if (!(h * std::abs(tau) < kAliasingLimit))
    throw AliasingError("fourier_integral: spacing*|tau| = " +
                        std::to_string(h * std::abs(tau)) +
                        " exceeds pi/4; refine the grid or shrink |tau|");
  const int n = samples.grid.n_points;
  std::complex<double> acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double theta = sign * samples.grid.point(i) * tau;
    std::complex<double> term =
        samples.values[i] * std::complex<double>(std::cos(theta), std::sin(theta));
    if (i == 0 || i == n - 1) term *= 0.5;
    acc += term;
  }
  return acc * h;
}

}  // namespace homdip
