#include "homdip/schmidt.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace homdip {

SchmidtDecomposition schmidt_decompose(const JointSpectralAmplitude& jsa,
                                       double tol) {
  if (!(tol >= 0.0 && tol < 1.0))
    throw std::invalid_argument("schmidt_decompose: tol must lie in [0, 1)");
  if (!jsa.values.allFinite())
    throw ContractViolation("schmidt_decompose: JSA contains non-finite values");

  const double h1 = jsa.grid1.spacing();
  const double h2 = jsa.grid2.spacing();
  // continuum <-> matrix dictionary: quadrature-weighted matrix keeps
  // sum u_k^2 equal to the continuum norm
  Eigen::MatrixXcd m = jsa.values * std::sqrt(h1 * h2);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const Eigen::MatrixXcd& u = svd.matrixU();
  const Eigen::MatrixXcd& v = svd.matrixV();

  const double u0 = s(0);
  int keep = 0;
  while (keep < s.size() && s(keep) >= tol * u0) ++keep;
  if (keep == 0) keep = 1;

  SchmidtDecomposition d;
  d.truncation_tol = tol;
  double kept_weight = 0.0;
  for (int k = 0; k < keep; ++k) kept_weight += s(k) * s(k);
  for (int k = keep; k < s.size(); ++k) d.dropped_weight += s(k) * s(k);
  const double renorm = 1.0 / std::sqrt(kept_weight);

  const double w1 = 1.0 / std::sqrt(h1);
  const double w2 = 1.0 / std::sqrt(h2);
  for (int k = 0; k < keep; ++k) {
    d.coefficients.push_back(s(k) * renorm);
    ComplexSamples m1{jsa.grid1, {}}, m2{jsa.grid2, {}};
    m1.values.resize(jsa.grid1.n_points);
    m2.values.resize(jsa.grid2.n_points);
    for (int i = 0; i < jsa.grid1.n_points; ++i) m1.values[i] = u(i, k) * w1;
    // f = U S V^H, so the second-side mode is conj(V(:,k))
    for (int j = 0; j < jsa.grid2.n_points; ++j)
      m2.values[j] = std::conj(v(j, k)) * w2;

    // phase convention: largest-|.| sample of the first-side mode is made
    // real positive, with the compensating phase on the second side
    int imax = 0;
    double best = 0.0;
    for (int i = 0; i < jsa.grid1.n_points; ++i) {
      const double a = std::abs(m1.values[i]);
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    if (best > 0.0) {
      const std::complex<double> phase = m1.values[imax] / best;
      for (auto& x : m1.values) x /= phase;
      for (auto& x : m2.values) x *= phase;
    }
    d.modes1.push_back(std::move(m1));
    d.modes2.push_back(std::move(m2));
  }
  return d;
}

SpectralEnsemble reduced_ensemble(const SchmidtDecomposition& decomp, int which) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("reduced_ensemble: which must be 1 or 2");
  SpectralEnsemble e;
  for (double u : decomp.coefficients) e.weights.push_back(u * u);
  e.modes = (which == 1) ? decomp.modes1 : decomp.modes2;
  return e;
}

double purity(const SpectralEnsemble& ensemble) {
  double p = 0.0;
  for (double q : ensemble.weights) p += q * q;
  return p;
}

JointSpectralAmplitude reconstruct(const SchmidtDecomposition& decomp) {
  if (decomp.coefficients.empty())
    throw std::invalid_argument("reconstruct: empty decomposition");
  const FrequencyGrid& g1 = decomp.modes1.front().grid;
  const FrequencyGrid& g2 = decomp.modes2.front().grid;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(g1.n_points, g2.n_points);
  for (size_t k = 0; k < decomp.coefficients.size(); ++k) {
    Eigen::Map<const Eigen::VectorXcd> m1(decomp.modes1[k].values.data(),
                                          g1.n_points);
    Eigen::Map<const Eigen::VectorXcd> m2(decomp.modes2[k].values.data(),
                                          g2.n_points);
    m.noalias() += decomp.coefficients[k] * m1 * m2.transpose();
  }
  return JointSpectralAmplitude{g1, g2, std::move(m)};
}

}  // namespace homdip
