#include "divform/grid_calculus.hpp"

#include <stdexcept>

namespace divform {

Eigen::VectorXd node_derivative(const DiscreteDomain& dom,
                                const Eigen::VectorXd& f, int axis) {
  if (f.size() != dom.num_nodes()) {
    throw std::invalid_argument("node_derivative: field/grid size mismatch");
  }
  if (axis < 0 || axis >= dom.dim()) {
    throw std::invalid_argument("node_derivative: bad axis");
  }
  const int n = dom.cells();
  const double h = dom.spacing(axis);
  const int stride = axis == 0 ? 1 : dom.nodes_per_axis();
  Eigen::VectorXd out(dom.num_nodes());
  for (int node = 0; node < dom.num_nodes(); ++node) {
    const int idx = dom.axis_index(node, axis);
    if (idx == 0) {
      out[node] = (-3.0 * f[node] + 4.0 * f[node + stride] -
                   f[node + 2 * stride]) /
                  (2.0 * h);
    } else if (idx == n) {
      out[node] = (3.0 * f[node] - 4.0 * f[node - stride] +
                   f[node - 2 * stride]) /
                  (2.0 * h);
    } else {
      out[node] = (f[node + stride] - f[node - stride]) / (2.0 * h);
    }
  }
  return out;
}

Eigen::MatrixXd node_gradient(const DiscreteDomain& dom,
                              const Eigen::VectorXd& f) {
  Eigen::MatrixXd g(dom.num_nodes(), dom.dim());
  for (int a = 0; a < dom.dim(); ++a) {
    g.col(a) = node_derivative(dom, f, a);
  }
  return g;
}

Eigen::VectorXd node_divergence(const DiscreteDomain& dom,
                                const Eigen::MatrixXd& vf) {
  if (vf.rows() != dom.num_nodes() || vf.cols() != dom.dim()) {
    throw std::invalid_argument("node_divergence: field/grid size mismatch");
  }
  Eigen::VectorXd d = Eigen::VectorXd::Zero(dom.num_nodes());
  for (int a = 0; a < dom.dim(); ++a) {
    d += node_derivative(dom, vf.col(a), a);
  }
  return d;
}

}  // namespace divform
