#include "homdip/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "homdip/warnings.hpp"

namespace homdip {

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

SpectralAmplitude gaussian_amplitude(double center, double sigma) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("gaussian_amplitude: sigma must be positive");
  SpectralAmplitude sa;
  sa.shape = SpectralShape::gaussian;
  sa.center = center;
  sa.sigma = sigma;
  return sa;
}

SpectralAmplitude sinc_amplitude(double center, double scale) {
  if (!(scale > 0.0))
    throw std::invalid_argument("sinc_amplitude: scale must be positive");
  SpectralAmplitude sa;
  sa.shape = SpectralShape::sinc;
  sa.center = center;
  sa.scale = scale;
  return sa;
}

SpectralAmplitude tabulated_amplitude(ComplexSamples table) {
  if (table.grid.n_points < 3 ||
      static_cast<int>(table.values.size()) != table.grid.n_points)
    throw std::invalid_argument("tabulated_amplitude: malformed table");
  // normalize on the table's own grid so evaluate() is close to unit norm
  ComplexSamples abs2 = table;
  for (auto& v : abs2.values) v = std::norm(v);
  const double nrm = integrate(abs2).real();
  if (!(nrm > 0.0))
    throw std::invalid_argument("tabulated_amplitude: table has zero norm");
  const double s = 1.0 / std::sqrt(nrm);
  for (auto& v : table.values) v *= s;

  SpectralAmplitude sa;
  sa.shape = SpectralShape::tabulated;
  sa.table = std::move(table);

  // rms center and width of |phi|^2, used for coverage checks and defaults
  ComplexSamples m0 = sa.table, m1 = sa.table, m2 = sa.table;
  for (int i = 0; i < sa.table.grid.n_points; ++i) {
    const double w = sa.table.grid.point(i);
    const double d = std::norm(sa.table.values[i]);
    m0.values[i] = d;
    m1.values[i] = d * w;
    m2.values[i] = d * w * w;
  }
  const double i0 = integrate(m0).real();
  const double mean = integrate(m1).real() / i0;
  const double var = integrate(m2).real() / i0 - mean * mean;
  sa.center = mean;
  const double span = sa.table.grid.omega_max - sa.table.grid.omega_min;
  sa.sigma = var > 0.0 ? std::sqrt(var) : span / 12.0;
  return sa;
}

SpectralAmplitude load_amplitude(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_amplitude: cannot open " + path);
  std::vector<double> omegas;
  std::vector<std::complex<double>> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double w, re, im = 0.0;
    if (!(ls >> w)) continue;  // blank line
    if (!(ls >> re))
      throw std::invalid_argument("load_amplitude: " + path + ":" +
                                  std::to_string(lineno) + ": missing value");
    ls >> im;  // optional third column
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("load_amplitude: " + path + ":" +
                                  std::to_string(lineno) + ": trailing data");
    omegas.push_back(w);
    values.emplace_back(re, im);
  }
  const int n = static_cast<int>(omegas.size());
  if (n < 3)
    throw std::invalid_argument("load_amplitude: " + path +
                                ": need at least 3 samples");
  const double h = (omegas.back() - omegas.front()) / (n - 1);
  if (!(h > 0.0))
    throw std::invalid_argument("load_amplitude: " + path +
                                ": omegas must increase");
  for (int i = 0; i < n; ++i) {
    const double expect = omegas.front() + i * h;
    if (std::abs(omegas[i] - expect) > 1e-9 * std::abs(h) * n)
      throw std::invalid_argument("load_amplitude: " + path +
                                  ": omegas must be uniformly spaced");
  }
  ComplexSamples table;
  table.grid = make_grid(omegas.front(), omegas.back(), n);
  table.values = std::move(values);
  return tabulated_amplitude(std::move(table));
}

std::complex<double> evaluate(const SpectralAmplitude& sa, double omega) {
  switch (sa.shape) {
    case SpectralShape::gaussian: {
      const double d = (omega - sa.center) / sa.sigma;
      return std::pow(M_PI, -0.25) / std::sqrt(sa.sigma) * std::exp(-0.5 * d * d);
    }
    case SpectralShape::sinc:
      return std::sqrt(sa.scale / M_PI) * sinc(sa.scale * (omega - sa.center));
    case SpectralShape::tabulated: {
      const FrequencyGrid& g = sa.table.grid;
      if (omega < g.omega_min || omega > g.omega_max) return 0.0;
      const double t = (omega - g.omega_min) / g.spacing();
      int i = static_cast<int>(t);
      if (i >= g.n_points - 1) i = g.n_points - 2;
      const double frac = t - i;
      return (1.0 - frac) * sa.table.values[i] + frac * sa.table.values[i + 1];
    }
  }
  throw std::logic_error("evaluate: bad shape");
}

double amplitude_center(const SpectralAmplitude& sa) { return sa.center; }

double amplitude_width(const SpectralAmplitude& sa) {
  switch (sa.shape) {
    case SpectralShape::gaussian:
      return sa.sigma;
    case SpectralShape::sinc:
      return 1.0 / sa.scale;
    case SpectralShape::tabulated:
      return sa.sigma;
  }
  throw std::logic_error("amplitude_width: bad shape");
}

ComplexSamples sample(const SpectralAmplitude& sa, const FrequencyGrid& grid) {
  const double w = amplitude_width(sa);
  const double c = amplitude_center(sa);
  if (grid.omega_min > c - 6.0 * w || grid.omega_max < c + 6.0 * w) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "sample: grid [%g, %g] covers less than +-6 widths around "
                  "center %g (width %g)",
                  grid.omega_min, grid.omega_max, c, w);
    warn(buf);
  }
  ComplexSamples out;
  out.grid = grid;
  out.values.resize(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i)
    out.values[i] = evaluate(sa, grid.point(i));

  ComplexSamples abs2 = out;
  for (auto& v : abs2.values) v = std::norm(v);
  const double raw = integrate(abs2).real();
  if (!(raw > 0.0))
    throw std::invalid_argument("sample: amplitude vanishes on the grid");
  if (std::abs(raw - 1.0) > 1e-3) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "sample: raw norm %.6f renormalized to 1 (truncated tails?)",
                  raw);
    warn(buf);
  }
  const double s = 1.0 / std::sqrt(raw);
  for (auto& v : out.values) v *= s;
  return out;
}

double gaussian_dip_closed_form(double sigma_a, double sigma_b, double wbar_a,
                                double wbar_b, double tau) {
  if (!(sigma_a > 0.0) || !(sigma_b > 0.0))
    throw std::invalid_argument("gaussian_dip_closed_form: widths must be positive");
  const double s2 = sigma_a * sigma_a + sigma_b * sigma_b;
  const double d = wbar_a - wbar_b;
  const double expo =
      (sigma_a * sigma_a * sigma_b * sigma_b * tau * tau + d * d) / s2;
  return 0.5 - (sigma_a * sigma_b / s2) * std::exp(-expo);
}

double sinc_dip_closed_form(double A, double tau) {
  if (!(A > 0.0))
    throw std::invalid_argument("sinc_dip_closed_form: A must be positive");
  const double m =
      std::abs(tau) - std::abs(0.5 * tau - A) - std::abs(0.5 * tau + A);
  return 0.5 - m * m / (8.0 * A * A);
}

}  // namespace homdip
