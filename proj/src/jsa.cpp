#include "homdip/jsa.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace homdip {

PumpEnvelope PumpEnvelope::pulsed(double center, double sigma) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("PumpEnvelope::pulsed: sigma must be positive");
  PumpEnvelope p;
  p.kind = Kind::pulsed;
  p.center = center;
  p.sigma = sigma;
  return p;
}

PumpEnvelope PumpEnvelope::cw(double center) {
  PumpEnvelope p;
  p.kind = Kind::cw;
  p.center = center;
  return p;
}

Abc abc_from_dispersion(const DispersionParams& d) {
  if (!(d.L > 0.0))
    throw std::invalid_argument("abc_from_dispersion: L must be positive");
  Abc r;
  r.A = 0.5 * d.L * (d.k1_prime - d.kp_prime);
  r.B = 0.5 * d.L * (d.k2_prime - d.kp_prime);
  r.C = 0.5 * d.L *
        (d.k_10 + d.k_20 - d.k_p0 +
         (d.k1_prime + d.k2_prime - 2.0 * d.kp_prime) * d.omega_bar);
  return r;
}

double phase_matching_eval(const PhaseMatching& pm, double omega1, double omega2) {
  const double arg = pm.A * omega1 + pm.B * omega2 - pm.C;
  switch (pm.shape) {
    case PmShape::sinc:
      return sinc(arg);
    case PmShape::gaussian:
      if (!(pm.gamma > 0.0))
        throw std::invalid_argument("phase_matching_eval: gamma must be positive");
      return std::exp(-pm.gamma * arg * arg);
  }
  throw std::logic_error("phase_matching_eval: bad shape");
}

double jsa_norm(const JointSpectralAmplitude& jsa) {
  return jsa.values.squaredNorm() * jsa.grid1.spacing() * jsa.grid2.spacing();
}

JointSpectralAmplitude jsa_from_samples(const FrequencyGrid& grid1,
                                        const FrequencyGrid& grid2,
                                        Eigen::MatrixXcd values) {
  if (values.rows() != grid1.n_points || values.cols() != grid2.n_points)
    throw std::invalid_argument("jsa_from_samples: matrix shape does not match grids");
  JointSpectralAmplitude jsa{grid1, grid2, std::move(values)};
  const double nrm = jsa_norm(jsa);
  if (!(nrm > 0.0))
    throw std::invalid_argument("jsa_from_samples: samples are identically zero");
  jsa.values *= 1.0 / std::sqrt(nrm);
  return jsa;
}

JointSpectralAmplitude build_jsa(const PhaseMatching& pm, const PumpEnvelope& pump,
                                 const FrequencyGrid& grid1,
                                 const FrequencyGrid& grid2) {
  if (pump.kind != PumpEnvelope::Kind::pulsed)
    throw std::invalid_argument(
        "build_jsa: cw pumps have no 2-D JSA; use build_cw_marginal");
  Eigen::MatrixXcd m(grid1.n_points, grid2.n_points);
  const double inv2s2 = 1.0 / (2.0 * pump.sigma * pump.sigma);
  for (int i = 0; i < grid1.n_points; ++i) {
    const double w1 = grid1.point(i);
    for (int j = 0; j < grid2.n_points; ++j) {
      const double w2 = grid2.point(j);
      const double ds = w1 + w2 - 2.0 * pump.center;
      m(i, j) = phase_matching_eval(pm, w1, w2) * std::exp(-ds * ds * inv2s2);
    }
  }
  try {
    return jsa_from_samples(grid1, grid2, std::move(m));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("build_jsa: product vanishes on the grids");
  }
}

JointSpectralAmplitude jsa_from_product(const SpectralAmplitude& phi,
                                        const SpectralAmplitude& varphi,
                                        const FrequencyGrid& grid1,
                                        const FrequencyGrid& grid2) {
  Eigen::MatrixXcd m(grid1.n_points, grid2.n_points);
  Eigen::VectorXcd v1(grid1.n_points), v2(grid2.n_points);
  for (int i = 0; i < grid1.n_points; ++i) v1(i) = evaluate(phi, grid1.point(i));
  for (int j = 0; j < grid2.n_points; ++j) v2(j) = evaluate(varphi, grid2.point(j));
  m = v1 * v2.transpose();
  return jsa_from_samples(grid1, grid2, std::move(m));
}

CwMarginal build_cw_marginal(const PhaseMatching& pm, double omega_bar,
                             const FrequencyGrid& grid) {
  CwMarginal cm;
  cm.omega_bar = omega_bar;
  cm.g.grid = grid;
  cm.g.values.resize(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    const double nu = grid.point(i);
    cm.g.values[i] = phase_matching_eval(pm, omega_bar - nu, omega_bar + nu);
  }
  ComplexSamples abs2 = cm.g;
  for (auto& v : abs2.values) v = std::norm(v);
  const double nrm = integrate(abs2).real();
  if (!(nrm > 0.0))
    throw std::invalid_argument("build_cw_marginal: marginal vanishes on the grid");
  const double s = 1.0 / std::sqrt(nrm);
  for (auto& v : cm.g.values) v *= s;
  return cm;
}

void write_jsa(const JointSpectralAmplitude& jsa, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_jsa: cannot open " + path);
  char buf[128];
  std::snprintf(buf, sizeof buf, "# jsa %d %d %.17g %.17g %.17g %.17g\n",
                jsa.grid1.n_points, jsa.grid2.n_points, jsa.grid1.omega_min,
                jsa.grid1.omega_max, jsa.grid2.omega_min, jsa.grid2.omega_max);
  out << buf;
  for (int i = 0; i < jsa.grid1.n_points; ++i)
    for (int j = 0; j < jsa.grid2.n_points; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g\n", jsa.values(i, j).real(),
                    jsa.values(i, j).imag());
      out << buf;
    }
  if (!out) throw std::runtime_error("write_jsa: write failed for " + path);
}

JointSpectralAmplitude read_jsa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_jsa: cannot open " + path);
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string hash, tag;
  int n1 = 0, n2 = 0;
  double a1, b1, a2, b2;
  hs >> hash >> tag >> n1 >> n2 >> a1 >> b1 >> a2 >> b2;
  if (hash != "#" || tag != "jsa" || !hs)
    throw std::invalid_argument("read_jsa: bad header in " + path);
  Eigen::MatrixXcd m(n1, n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      double re, im;
      if (!(in >> re >> im))
        throw std::invalid_argument("read_jsa: truncated data in " + path);
      m(i, j) = std::complex<double>(re, im);
    }
  return jsa_from_samples(make_grid(a1, b1, n1), make_grid(a2, b2, n2),
                          std::move(m));
}

}  // namespace homdip
