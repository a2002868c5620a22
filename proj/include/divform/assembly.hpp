#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <string>

#include "divform/domain.hpp"
#include "divform/fields.hpp"

namespace divform {

enum class ProblemKind { scalar_second_order, second_order_system, fourth_order_clamped };

/// Generalized symmetric eigenproblem K x = lambda M x over interior nodes.
/// K carries the e^{-eta}-weighted stiffness, M the weighted lumped mass
/// (e^{-eta(node)} * cell volume). K is symmetrized at assembly and the
/// relative defect is recorded.
struct Pencil {
  Eigen::SparseMatrix<double> stiffness;
  Eigen::VectorXd mass;  // strictly positive diagonal
  ProblemKind kind = ProblemKind::scalar_second_order;
  double alpha = 0.0;
  int components = 1;
  int interior_count = 0;
  double symmetry_defect = 0.0;  // relative, max-norm

  int size() const { return static_cast<int>(mass.size()); }
};

/// Scalar operator -div_eta(T grad u) with Dirichlet rows eliminated.
/// Flux-conservative stencils with arithmetic face averages for the diagonal
/// tensor entries, the 9-point cross-derivative stencil for T12.
/// Defect above 1e-12 relative is an error.
Pencil assemble_scalar(const DiscreteDomain& dom, const GridTensorField& T,
                       const GridScalarField& eta);

/// Coupled system: block-diagonal scalar operators plus
/// alpha * Dt W D where D is the discrete div_eta and W the weighted node
/// volumes. Boxes only; arcs are rejected. alpha must be >= 0.
Pencil assemble_vector_system(const DiscreteDomain& dom,
                              const GridTensorField& T,
                              const GridScalarField& eta, double alpha);

/// Clamped fourth-order operator: the discrete second-order operator composed
/// with itself on a ghost-extended grid (u = 0 at boundary nodes, even
/// reflection outside, which enforces the conormal condition to second
/// order). Requires T diagonal within one cell of the boundary. Defect above
/// 1e-8 relative is an error.
Pencil assemble_fourth_order_clamped(const DiscreteDomain& dom,
                                     const GridTensorField& T,
                                     const GridScalarField& eta);

/// Discrete weighted divergence: ||div_eta u||^2 = (D u)^t diag(w) (D u) for
/// stacked interior components u. Shared by the system assembly and the
/// eigenfunction functionals so the two agree exactly.
struct WeightedDivergence {
  Eigen::SparseMatrix<double> op;  // interior x (dim * interior)
  Eigen::VectorXd weights;         // e^{-eta} * cell volume per interior node
};
WeightedDivergence div_eta_operator(const DiscreteDomain& dom,
                                    const GridScalarField& eta);

/// Coordinate triplet dump (row col value, 17 significant digits), one entry
/// per line, zero-based indices.
void dump_matrix_triplets(const Eigen::SparseMatrix<double>& m,
                          const std::string& path);
void dump_diagonal_triplets(const Eigen::VectorXd& diag,
                            const std::string& path);

}  // namespace divform
