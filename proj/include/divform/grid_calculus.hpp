#pragma once

#include <Eigen/Core>

#include "divform/domain.hpp"

namespace divform {

/// d f / d x_axis of a node field: centered differences at interior nodes,
/// second-order one-sided three-point stencils on the boundary layer.
Eigen::VectorXd node_derivative(const DiscreteDomain& dom,
                                const Eigen::VectorXd& f, int axis);

/// Gradient of a node field, num_nodes x dim.
Eigen::MatrixXd node_gradient(const DiscreteDomain& dom,
                              const Eigen::VectorXd& f);

/// Divergence of a node vector field (columns = components).
Eigen::VectorXd node_divergence(const DiscreteDomain& dom,
                                const Eigen::MatrixXd& vf);

}  // namespace divform
