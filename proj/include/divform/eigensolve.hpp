#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>

#include "divform/assembly.hpp"

namespace divform {

/// Smallest eigenpairs of a pencil, ascending, with M-orthonormal vectors and
/// certified relative residuals ||K x - lambda M x|| / (lambda ||M x||).
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;  // columns
  Eigen::VectorXd residuals;
  int iterations = 0;
  std::uint64_t seed = 0;
};

struct SolveOptions {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int sweep_budget_per_pair = 500;
  int dense_threshold = 600;  // below this, reduce densely
};

/// Thrown when the iteration budget is exhausted; carries the best residuals
/// reached so far.
class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& msg, Eigen::VectorXd best)
      : std::runtime_error(msg), best_residuals(std::move(best)) {}
  Eigen::VectorXd best_residuals;
};

/// Strategy: dense reduction below the size threshold, otherwise shift-invert
/// subspace iteration with a sparse LDLT factorization of K and Rayleigh-Ritz
/// extraction. Deterministic for a fixed seed. Rejects nonpositive mass
/// entries and (on the sparse path) a stiffness that is not positive
/// definite.
Spectrum smallest_eigenpairs(const Pencil& pencil, int k,
                             const SolveOptions& options = {});
Spectrum smallest_eigenpairs(const Pencil& pencil, int k, double tol,
                             std::uint64_t seed);

double relative_residual(const Pencil& pencil, double lambda,
                         const Eigen::VectorXd& x);

}  // namespace divform
