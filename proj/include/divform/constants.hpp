#pragma once

#include <Eigen/Core>

#include <optional>

#include "divform/domain.hpp"
#include "divform/fields.hpp"

namespace divform {

/// The sup/inf quantities entering every bound. epsilon/delta bracket the
/// tensor spectrum, T0 = sup |tr(grad T)|, eta0 = sup |grad eta|,
/// C0 = sup { div(T(T(grad eta) - tr(grad T)))/2 - |T(grad eta)|^2/4 },
/// H0 = sup of the generalized mean curvature norm (0 on boxes, sup|t(s)|/R
/// on arcs). C0 may have either sign and is never clamped.
struct OperatorConstants {
  double epsilon = 1.0;
  double delta = 1.0;
  double T0 = 0.0;
  double eta0 = 0.0;
  double C0 = 0.0;
  double H0 = 0.0;
};

/// Per-node vector with components sum_j d_j T_ij, num_nodes x dim.
Eigen::MatrixXd trace_nabla_T(const DiscreteDomain& dom,
                              const GridTensorField& T);

/// The C0 integrand at every node, via nested finite differences.
Eigen::VectorXd c0_pointwise(const DiscreteDomain& dom,
                             const GridTensorField& T,
                             const GridScalarField& eta);

/// Suprema/infima over all nodes, boundary included.
OperatorConstants compute_constants(const DiscreteDomain& dom,
                                    const GridTensorField& T,
                                    const GridScalarField& eta);

/// Exact constants for preset combinations that admit them (constant tensors
/// with zero/linear/quadratic drifts). Used to cross-check the finite
/// difference path; absent for combinations without a clean closed form.
std::optional<OperatorConstants> closed_form_constants(
    const DomainSpec& spec, const EtaPreset& eta, const TensorPreset& tensor);

}  // namespace divform
