#include "divform/eigensolve.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <random>

namespace divform {

namespace {

void check_inputs(const Pencil& pencil, int k, const SolveOptions& opt) {
  const int n = pencil.size();
  if (pencil.stiffness.rows() != n || pencil.stiffness.cols() != n) {
    throw std::invalid_argument("smallest_eigenpairs: pencil size mismatch");
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument("smallest_eigenpairs: k out of range");
  }
  if (!(opt.tol > 0.0) || opt.tol > 1e-4) {
    throw std::invalid_argument(
        "smallest_eigenpairs: tol must lie in (0, 1e-4]");
  }
  if ((pencil.mass.array() <= 0.0).any()) {
    throw std::invalid_argument(
        "smallest_eigenpairs: mass matrix must be positive definite");
  }
}

Spectrum dense_solve(const Pencil& pencil, int k, const SolveOptions& opt) {
  // M is diagonal: reduce to a standard problem with D^{-1/2} K D^{-1/2}.
  const Eigen::VectorXd dinv_sqrt = pencil.mass.array().rsqrt();
  Eigen::MatrixXd kd = pencil.stiffness;
  kd = dinv_sqrt.asDiagonal() * kd * dinv_sqrt.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kd);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("smallest_eigenpairs: dense reduction failed");
  }
  Spectrum s;
  s.seed = opt.seed;
  s.iterations = 1;
  s.eigenvalues = es.eigenvalues().head(k);
  s.eigenvectors = dinv_sqrt.asDiagonal() * es.eigenvectors().leftCols(k);
  s.residuals.resize(k);
  for (int i = 0; i < k; ++i) {
    s.residuals[i] =
        relative_residual(pencil, s.eigenvalues[i], s.eigenvectors.col(i));
  }
  return s;
}

// M-orthonormalize the columns of x in place via the Cholesky factor of the
// Gram matrix; returns false when the block is numerically rank deficient.
bool m_orthonormalize(Eigen::MatrixXd& x, const Eigen::VectorXd& mass) {
  Eigen::MatrixXd gram = x.transpose() * (mass.asDiagonal() * x);
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) return false;
  x = llt.matrixU().triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(x);
  return true;
}

Spectrum shift_invert_solve(const Pencil& pencil, int k,
                            const SolveOptions& opt) {
  const int n = pencil.size();
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(pencil.stiffness);
  if (ldlt.info() != Eigen::Success) {
    throw std::runtime_error("smallest_eigenpairs: LDLT factorization failed");
  }
  if ((ldlt.vectorD().array() <= 0.0).any()) {
    throw std::runtime_error(
        "smallest_eigenpairs: stiffness matrix is not positive definite");
  }

  const int block = std::min(n, std::max(k + 8, 2 * k));
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd x(n, block);
  for (int j = 0; j < block; ++j) {
    for (int i = 0; i < n; ++i) x(i, j) = gauss(rng);
  }
  if (!m_orthonormalize(x, pencil.mass)) {
    throw std::runtime_error("smallest_eigenpairs: degenerate start block");
  }

  Eigen::VectorXd theta;
  Eigen::VectorXd best = Eigen::VectorXd::Constant(k, 1.0);
  const long budget = static_cast<long>(opt.sweep_budget_per_pair) * k;
  for (long sweep = 1; sweep <= budget; ++sweep) {
    Eigen::MatrixXd y = ldlt.solve(pencil.mass.asDiagonal() * x);
    if (!m_orthonormalize(y, pencil.mass)) {
      // Refresh the trailing directions and retry the sweep.
      for (int j = k; j < block; ++j) {
        for (int i = 0; i < n; ++i) y(i, j) = gauss(rng);
      }
      if (!m_orthonormalize(y, pencil.mass)) {
        throw SolveError("smallest_eigenpairs: lost block rank", best);
      }
    }
    const Eigen::MatrixXd projected =
        y.transpose() * (pencil.stiffness * y).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(
        0.5 * (projected + projected.transpose()));
    x = y * small.eigenvectors();
    theta = small.eigenvalues();

    bool converged = true;
    for (int i = 0; i < k; ++i) {
      best[i] = relative_residual(pencil, theta[i], x.col(i));
      if (best[i] > opt.tol) converged = false;
    }
    if (converged) {
      Spectrum s;
      s.seed = opt.seed;
      s.iterations = static_cast<int>(sweep);
      s.eigenvalues = theta.head(k);
      s.eigenvectors = x.leftCols(k);
      s.residuals = best;
      return s;
    }
  }
  throw SolveError(
      "smallest_eigenpairs: iteration budget exhausted (best residual " +
          std::to_string(best.maxCoeff()) + ")",
      best);
}

}  // namespace

Spectrum smallest_eigenpairs(const Pencil& pencil, int k,
                             const SolveOptions& opt) {
  check_inputs(pencil, k, opt);
  const int n = pencil.size();
  if (n <= opt.dense_threshold || k + 5 > n) {
    return dense_solve(pencil, k, opt);
  }
  return shift_invert_solve(pencil, k, opt);
}

Spectrum smallest_eigenpairs(const Pencil& pencil, int k, double tol,
                             std::uint64_t seed) {
  SolveOptions opt;
  opt.tol = tol;
  opt.seed = seed;
  return smallest_eigenpairs(pencil, k, opt);
}

double relative_residual(const Pencil& pencil, double lambda,
                         const Eigen::VectorXd& x) {
  if (x.size() != pencil.size()) {
    throw std::invalid_argument("relative_residual: size mismatch");
  }
  const Eigen::VectorXd mx = pencil.mass.asDiagonal() * x;
  const Eigen::VectorXd r = pencil.stiffness * x - lambda * mx;
  return r.norm() / (std::abs(lambda) * mx.norm());
}

}  // namespace divform
