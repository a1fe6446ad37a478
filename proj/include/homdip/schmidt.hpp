#pragma once

#include <vector>

#include "homdip/jsa.hpp"

namespace homdip {

// f(w1,w2) = sum_k u_k phi_k(w1) varphi_k(w2) with descending coefficients
// and modes orthonormal in the continuum (rectangle-rule) inner product.
// Coefficients below truncation_tol * u_0 are dropped and the survivors are
// renormalized; dropped_weight records the removed sum of u_k^2.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<ComplexSamples> modes1;
  std::vector<ComplexSamples> modes2;
  double truncation_tol = 0.0;
  double dropped_weight = 0.0;
};

// Diagonal mixture of orthonormal single-photon spectral modes.
struct SpectralEnsemble {
  std::vector<double> weights;
  std::vector<ComplexSamples> modes;
};

SchmidtDecomposition schmidt_decompose(const JointSpectralAmplitude& jsa,
                                       double tol = 1e-6);

// Reduced single-photon ensemble after tracing out the other photon:
// weights u_k^2, modes from side `which` (1 or 2).
SpectralEnsemble reduced_ensemble(const SchmidtDecomposition& decomp, int which);

// tr[rho^2] = sum q_k^2.
double purity(const SpectralEnsemble& ensemble);

// sum_k u_k phi_k(w1) varphi_k(w2) on the original grids.
JointSpectralAmplitude reconstruct(const SchmidtDecomposition& decomp);

}  // namespace homdip
