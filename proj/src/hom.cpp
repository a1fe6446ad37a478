#include "homdip/hom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "homdip/warnings.hpp"

namespace homdip {

namespace {

double checked_probability(double p, const char* what) {
  if (!std::isfinite(p) || p < -kProbabilitySlack || p > 0.5 + kProbabilitySlack) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s: probability %.12g outside [0, 0.5]",
                  what, p);
    throw ContractViolation(buf);
  }
  return p;
}

double checked_real(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > kRealnessTol) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s: imaginary residue %.3g exceeds %.1g",
                  what, z.imag(), kRealnessTol);
    throw ContractViolation(buf);
  }
  return z.real();
}

void check_aliasing(const FrequencyGrid& grid, double tau, const char* what) {
  if (!(grid.spacing() * std::abs(tau) < kAliasingLimit)) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%s: spacing*|tau| = %.3g exceeds pi/4; refine the grid or "
                  "shrink |tau|",
                  what, grid.spacing() * std::abs(tau));
    throw AliasingError(buf);
  }
}

// trapezoid weights times the phase factor exp(i sign w tau)
Eigen::VectorXcd phase_weights(const FrequencyGrid& grid, double tau, int sign) {
  Eigen::VectorXcd e(grid.n_points);
  const double h = grid.spacing();
  for (int i = 0; i < grid.n_points; ++i) {
    const double theta = sign * grid.point(i) * tau;
    double w = (i == 0 || i == grid.n_points - 1) ? 0.5 * h : h;
    e(i) = w * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return e;
}

Eigen::MatrixXcd mode_matrix(const std::vector<ComplexSamples>& modes) {
  const int n = modes.front().grid.n_points;
  Eigen::MatrixXcd m(n, modes.size());
  for (size_t k = 0; k < modes.size(); ++k)
    for (int i = 0; i < n; ++i) m(i, k) = modes[k].values[i];
  return m;
}

}  // namespace

double p_separable(const ComplexSamples& phi, const ComplexSamples& varphi,
                   double tau) {
  if (phi.grid != varphi.grid)
    throw GridMismatchError("p_separable: amplitudes live on different grids");
  ComplexSamples overlap;
  overlap.grid = phi.grid;
  overlap.values.resize(phi.values.size());
  for (size_t i = 0; i < phi.values.size(); ++i)
    overlap.values[i] = std::conj(phi.values[i]) * varphi.values[i];
  const std::complex<double> j = fourier_integral(overlap, tau, -1);
  return checked_probability(0.5 - 0.5 * std::norm(j), "p_separable");
}

double p_separable(const SpectralAmplitude& phi, const SpectralAmplitude& varphi,
                   double tau, const FrequencyGrid& grid) {
  return p_separable(sample(phi, grid), sample(varphi, grid), tau);
}

double p_entangled(const JointSpectralAmplitude& jsa, double tau) {
  if (jsa.grid1 != jsa.grid2)
    throw GridMismatchError(
        "p_entangled: grids must be identical so the exchange w1<->w2 stays "
        "on-grid");
  check_aliasing(jsa.grid1, tau, "p_entangled");
  const Eigen::VectorXcd a = phase_weights(jsa.grid1, tau, -1);
  // S = sum_ij conj(f_ij) f_ji a_i conj(a_j)
  std::complex<double> s = 0.0;
  const int n = jsa.grid1.n_points;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> inner =
        (jsa.values.col(i).array() * jsa.values.row(i).transpose().array().conjugate() *
         a.array().conjugate())
            .sum();
    s += a(i) * inner;
  }
  const double re = checked_real(s, "p_entangled");
  return checked_probability(0.5 - 0.5 * re, "p_entangled");
}

double p_entangled_schmidt(const SchmidtDecomposition& decomp, double tau) {
  if (decomp.coefficients.empty())
    throw std::invalid_argument("p_entangled_schmidt: empty decomposition");
  if (decomp.modes1.front().grid != decomp.modes2.front().grid)
    throw GridMismatchError(
        "p_entangled_schmidt: both mode families must share one grid");
  const FrequencyGrid& grid = decomp.modes1.front().grid;
  check_aliasing(grid, tau, "p_entangled_schmidt");
  const int kk = static_cast<int>(decomp.coefficients.size());
  const Eigen::MatrixXcd m1 = mode_matrix(decomp.modes1);
  const Eigen::MatrixXcd m2 = mode_matrix(decomp.modes2);
  const Eigen::VectorXcd e = phase_weights(grid, tau, -1);
  // X_kk' = integral conj(phi_k) varphi_k' exp(-i w tau) dw
  const Eigen::MatrixXcd x = m1.adjoint() * e.asDiagonal() * m2;
  std::complex<double> s = 0.0;
  for (int k = 0; k < kk; ++k)
    for (int k2 = 0; k2 < kk; ++k2)
      s += decomp.coefficients[k] * decomp.coefficients[k2] * x(k, k2) *
           std::conj(x(k2, k));
  const double re = checked_real(s, "p_entangled_schmidt");
  return checked_probability(0.5 - 0.5 * re, "p_entangled_schmidt");
}

double p_cw(const CwMarginal& marginal, double tau) {
  const FrequencyGrid& grid = marginal.g.grid;
  if (grid.omega_min != -grid.omega_max)
    throw GridMismatchError(
        "p_cw: detuning grid must be symmetric about 0 so g(-nu) is on-grid");
  const int n = grid.n_points;
  ComplexSamples overlap;
  overlap.grid = grid;
  overlap.values.resize(n);
  for (int i = 0; i < n; ++i)
    overlap.values[i] =
        std::conj(marginal.g.values[n - 1 - i]) * marginal.g.values[i];
  const std::complex<double> j = fourier_integral(overlap, 2.0 * tau, +1);
  const double re = checked_real(j, "p_cw");
  return checked_probability(0.5 - 0.5 * re, "p_cw");
}

double p_mixed(const SpectralEnsemble& ens_a, const SpectralEnsemble& ens_b,
               double tau) {
  if (ens_a.weights.empty() || ens_b.weights.empty())
    throw std::invalid_argument("p_mixed: empty ensemble");
  if (ens_a.weights.size() != ens_a.modes.size() ||
      ens_b.weights.size() != ens_b.modes.size())
    throw std::invalid_argument("p_mixed: weights/modes size mismatch");
  for (const auto& e : {&ens_a, &ens_b}) {
    double total = 0.0;
    for (double q : e->weights) {
      if (q < 0.0) throw std::invalid_argument("p_mixed: negative weight");
      total += q;
    }
    if (std::abs(total - 1.0) > 1e-6)
      throw std::invalid_argument("p_mixed: weights must sum to 1");
  }
  const FrequencyGrid& grid = ens_a.modes.front().grid;
  for (const auto& m : ens_a.modes)
    if (m.grid != grid) throw GridMismatchError("p_mixed: mixed grids in ensemble");
  for (const auto& m : ens_b.modes)
    if (m.grid != grid) throw GridMismatchError("p_mixed: ensembles on different grids");
  check_aliasing(grid, tau, "p_mixed");

  const Eigen::MatrixXcd ma = mode_matrix(ens_a.modes);
  const Eigen::MatrixXcd mb = mode_matrix(ens_b.modes);
  const Eigen::VectorXcd e = phase_weights(grid, tau, -1);
  const Eigen::MatrixXcd x = ma.adjoint() * e.asDiagonal() * mb;
  double s = 0.0;
  for (int k = 0; k < x.rows(); ++k)
    for (int k2 = 0; k2 < x.cols(); ++k2)
      s += ens_a.weights[k] * ens_b.weights[k2] * std::norm(x(k, k2));
  return checked_probability(0.5 - 0.5 * s, "p_mixed");
}

DipCurve dip_curve(const std::function<double(double)>& engine,
                   const std::string& descriptor, double tau_min, double tau_max,
                   int n_tau) {
  if (!(tau_max > tau_min))
    throw std::invalid_argument("dip_curve: tau_max must exceed tau_min");
  if (n_tau < 2) throw std::invalid_argument("dip_curve: n_tau must be >= 2");
  DipCurve curve;
  curve.scenario_descriptor = descriptor;
  curve.taus.resize(n_tau);
  curve.probabilities.resize(n_tau);
  const double step = (tau_max - tau_min) / (n_tau - 1);
  for (int i = 0; i < n_tau; ++i) {
    // build the grid from both ends so a symmetric window yields exactly
    // mirrored tau values
    curve.taus[i] = (i <= (n_tau - 1) / 2) ? tau_min + i * step
                                           : tau_max - (n_tau - 1 - i) * step;
  }
  for (int i = 1; i < n_tau; ++i)
    if (!(curve.taus[i] > curve.taus[i - 1]))
      throw ContractViolation("dip_curve: tau grid not strictly increasing");
  for (int i = 0; i < n_tau; ++i) curve.probabilities[i] = engine(curve.taus[i]);
  return curve;
}

Visibility visibility(const DipCurve& curve) {
  const int n = static_cast<int>(curve.probabilities.size());
  if (n < 2) throw std::invalid_argument("visibility: need at least 2 samples");
  Visibility v;
  v.p_min =
      *std::min_element(curve.probabilities.begin(), curve.probabilities.end());
  const int k = std::max(1, n / 20);
  double acc = 0.0;
  for (int i = 0; i < k; ++i)
    acc += curve.probabilities[i] + curve.probabilities[n - 1 - i];
  v.p_max = acc / (2.0 * k);
  if (!(v.p_max > 0.0))
    throw ContractViolation("visibility: asymptote estimate not positive");
  if (std::abs(v.p_max - 0.5) > 1e-2) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "visibility: asymptote estimate %.4f is far from 0.5; the "
                  "tau window may be too narrow",
                  v.p_max);
    warn(buf);
  }
  v.value = (v.p_max - v.p_min) / v.p_max;
  return v;
}

}  // namespace homdip
