#pragma once

#include <Eigen/Core>

#include <array>

#include "divform/domain.hpp"

namespace divform {

/// One real value per grid node (the drift eta).
struct GridScalarField {
  Eigen::VectorXd values;
};

/// One symmetric positive definite matrix per grid node. Components are kept
/// column-wise: [t] in 1-D, [T11 T22 T12] in 2-D.
class GridTensorField {
 public:
  GridTensorField(int dim, int num_nodes);

  int dim() const { return dim_; }
  int num_nodes() const { return static_cast<int>(comps_.rows()); }

  double& comp(int node, int i, int j) { return comps_(node, comp_col(i, j)); }
  double comp(int node, int i, int j) const {
    return comps_(node, comp_col(i, j));
  }
  double scalar(int node) const { return comps_(node, 0); }
  Eigen::Matrix2d matrix2(int node) const;

  /// Smallest/largest eigenvalue of the node matrix.
  double min_eigenvalue(int node) const;
  double max_eigenvalue(int node) const;

  /// Throws std::invalid_argument naming the first offending node if any
  /// matrix fails symmetry (1e-14 of its magnitude) or positive definiteness.
  void validate() const;

 private:
  int comp_col(int i, int j) const { return i == j ? i : dim_; }
  int dim_;
  Eigen::MatrixXd comps_;
};

struct EtaPreset {
  enum class Kind { zero, quadratic, linear, tabulated };
  Kind kind = Kind::zero;
  double c = 0.0;                    // quadratic: c * |x - center|^2
  std::array<double, 2> center{0.0, 0.0};
  std::array<double, 2> slope{0.0, 0.0};  // linear: <slope, x>
  Eigen::VectorXd table;             // tabulated, exact grid size only
};

struct TensorPreset {
  enum class Kind { identity, constant_diagonal, rotated_diagonal, varying_diagonal };
  Kind kind = Kind::identity;
  std::array<double, 2> diag{1.0, 1.0};  // constant_diagonal entries
  double a = 1.0, b = 1.0, angle = 0.0;  // rotated_diagonal (2-D)
  double beta = 0.0;                     // varying: T_ii(x) = 1 + beta * x_i^2

  /// Node-independent presets; these are exactly divergence-free.
  bool constant() const { return kind != Kind::varying_diagonal; }
};

/// Samples eta at every node. Throws on dimension mismatch and on tabulated
/// data whose length differs from the node count (no interpolation).
GridScalarField sample_eta(const EtaPreset& preset, const DiscreteDomain& dom);

/// Samples T at every node and validates SPD; failure is an error naming the
/// offending node, not a warning.
GridTensorField sample_tensor(const TensorPreset& preset, const DiscreteDomain& dom);

}  // namespace divform
