#pragma once

#include <Eigen/Core>

#include <span>
#include <string>

namespace divform {

struct OracleSpectrum {
  std::string tag;
  Eigen::VectorXd values;  // ascending, positive
  std::string provenance;
};

/// Dirichlet Laplacian on a box: sorted values pi^2 sum_j (p_j / l_j)^2 with
/// multiplicities.
OracleSpectrum dirichlet_box_spectrum(std::span<const double> lengths,
                                      int count);

/// Clamped Euler-Bernoulli beam on (0, L): Gamma_i = (k_i / L)^4 where k_i are
/// the positive roots of cos(k) cosh(k) = 1, found by bisection.
OracleSpectrum clamped_beam_spectrum(double length, int count);

/// i-th positive root of cos(k) cosh(k) = 1 (1-based).
double beam_characteristic_root(int index);

/// Exact eigenvalues of the assembled 1-D pencil with constant scalar tensor
/// t and eta = 0: lambda_p = t * (4/h^2) sin^2(p pi h / (2L)), p = 1..N-1.
OracleSpectrum fd1d_dirichlet_spectrum(int cells, double t, double length);

}  // namespace divform
