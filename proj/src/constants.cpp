#include "divform/constants.hpp"

#include <algorithm>
#include <cmath>

#include "divform/grid_calculus.hpp"

namespace divform {

Eigen::MatrixXd trace_nabla_T(const DiscreteDomain& dom,
                              const GridTensorField& T) {
  const int nn = dom.num_nodes();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(nn, dom.dim());
  // component i: sum_j d_j T_ij
  for (int i = 0; i < dom.dim(); ++i) {
    for (int j = 0; j < dom.dim(); ++j) {
      Eigen::VectorXd tij(nn);
      for (int node = 0; node < nn; ++node) tij[node] = T.comp(node, i, j);
      out.col(i) += node_derivative(dom, tij, j);
    }
  }
  return out;
}

Eigen::VectorXd c0_pointwise(const DiscreteDomain& dom,
                             const GridTensorField& T,
                             const GridScalarField& eta) {
  const int nn = dom.num_nodes();
  const Eigen::MatrixXd grad_eta = node_gradient(dom, eta.values);
  const Eigen::MatrixXd trace_grad = trace_nabla_T(dom, T);

  Eigen::MatrixXd t_grad_eta(nn, dom.dim());   // T(grad eta)
  Eigen::MatrixXd flux(nn, dom.dim());         // T(T(grad eta) - tr(grad T))
  for (int node = 0; node < nn; ++node) {
    if (dom.dim() == 1) {
      const double t = T.scalar(node);
      t_grad_eta(node, 0) = t * grad_eta(node, 0);
      flux(node, 0) = t * (t_grad_eta(node, 0) - trace_grad(node, 0));
    } else {
      const Eigen::Matrix2d t = T.matrix2(node);
      const Eigen::Vector2d te = t * grad_eta.row(node).transpose();
      t_grad_eta.row(node) = te.transpose();
      flux.row(node) =
          (t * (te - trace_grad.row(node).transpose())).transpose();
    }
  }
  const Eigen::VectorXd div_flux = node_divergence(dom, flux);
  return 0.5 * div_flux - 0.25 * t_grad_eta.rowwise().squaredNorm();
}

OperatorConstants compute_constants(const DiscreteDomain& dom,
                                    const GridTensorField& T,
                                    const GridScalarField& eta) {
  T.validate();
  OperatorConstants c;
  const int nn = dom.num_nodes();

  c.epsilon = std::numeric_limits<double>::infinity();
  c.delta = 0.0;
  for (int node = 0; node < nn; ++node) {
    c.epsilon = std::min(c.epsilon, T.min_eigenvalue(node));
    c.delta = std::max(c.delta, T.max_eigenvalue(node));
  }

  c.T0 = trace_nabla_T(dom, T).rowwise().norm().maxCoeff();
  c.eta0 = node_gradient(dom, eta.values).rowwise().norm().maxCoeff();
  c.C0 = c0_pointwise(dom, T, eta).maxCoeff();

  c.H0 = 0.0;
  if (dom.kind() == DomainKind::arc) {
    for (int node = 0; node < nn; ++node) {
      c.H0 = std::max(c.H0, std::abs(T.scalar(node)) / dom.radius());
    }
  }
  return c;
}

namespace {

// Distance (squared min / max) from a point to the closed box [0,L1]x[0,L2].
double box_min_dist_sq(const DomainSpec& spec, int dim,
                       const std::array<double, 2>& p) {
  double d2 = 0.0;
  for (int a = 0; a < dim; ++a) {
    const double lo = 0.0, hi = spec.lengths[a];
    const double clamped = std::clamp(p[a], lo, hi);
    d2 += (p[a] - clamped) * (p[a] - clamped);
  }
  return d2;
}

double box_max_dist_sq(const DomainSpec& spec, int dim,
                       const std::array<double, 2>& p) {
  double d2 = 0.0;
  for (int a = 0; a < dim; ++a) {
    const double far = std::max(std::abs(p[a]), std::abs(spec.lengths[a] - p[a]));
    d2 += far * far;
  }
  return d2;
}

}  // namespace

std::optional<OperatorConstants> closed_form_constants(
    const DomainSpec& spec, const EtaPreset& eta, const TensorPreset& tensor) {
  if (!tensor.constant()) return std::nullopt;
  if (eta.kind == EtaPreset::Kind::tabulated) return std::nullopt;

  const int dim = spec.kind == DomainKind::arc ? 1 : spec.dimension;

  OperatorConstants c;
  double t11 = 1.0, t22 = 1.0, t12 = 0.0;
  switch (tensor.kind) {
    case TensorPreset::Kind::identity:
      break;
    case TensorPreset::Kind::constant_diagonal:
      t11 = tensor.diag[0];
      t22 = dim == 2 ? tensor.diag[1] : tensor.diag[0];
      break;
    case TensorPreset::Kind::rotated_diagonal: {
      const double co = std::cos(tensor.angle), si = std::sin(tensor.angle);
      t11 = tensor.a * co * co + tensor.b * si * si;
      t22 = tensor.a * si * si + tensor.b * co * co;
      t12 = (tensor.a - tensor.b) * co * si;
      break;
    }
    case TensorPreset::Kind::varying_diagonal:
      return std::nullopt;
  }
  if (dim == 1) {
    c.epsilon = c.delta = t11;
  } else if (tensor.kind == TensorPreset::Kind::rotated_diagonal) {
    c.epsilon = std::min(tensor.a, tensor.b);
    c.delta = std::max(tensor.a, tensor.b);
  } else {
    c.epsilon = std::min(t11, t22);
    c.delta = std::max(t11, t22);
  }
  c.T0 = 0.0;
  c.H0 = spec.kind == DomainKind::arc ? std::abs(t11) / spec.radius : 0.0;

  switch (eta.kind) {
    case EtaPreset::Kind::zero:
      c.eta0 = 0.0;
      c.C0 = 0.0;
      break;
    case EtaPreset::Kind::linear: {
      // grad eta = slope; C0 = -|T slope|^2 / 4 everywhere.
      const double gx = eta.slope[0], gy = dim == 2 ? eta.slope[1] : 0.0;
      const double wx = t11 * gx + t12 * gy;
      const double wy = t12 * gx + t22 * gy;
      c.eta0 = std::hypot(gx, gy);
      c.C0 = -0.25 * (wx * wx + (dim == 2 ? wy * wy : 0.0));
      break;
    }
    case EtaPreset::Kind::quadratic: {
      if (spec.kind == DomainKind::arc) {
        // eta(s) = cv (s - s0)^2 on (0, L), T = t.
        const double length = spec.radius * spec.angle_span;
        const double s0 = eta.center[0];
        const double dmax = std::max(std::abs(s0), std::abs(length - s0));
        const double dmin = std::abs(s0 - std::clamp(s0, 0.0, length));
        c.eta0 = 2.0 * std::abs(eta.c) * dmax;
        // pointwise: t^2 (c - c^2 (s - s0)^2)
        c.C0 = t11 * t11 * (eta.c - eta.c * eta.c * dmin * dmin);
        break;
      }
      // grad eta = 2 cv (x - center); T constant:
      //   C0 pointwise = cv tr(T^2) - cv^2 |T (x - center)|^2,
      // maximized by minimizing |T (x - center)|: zero when the center lies
      // in the box, a per-axis clamp for diagonal T, skipped otherwise.
      const double d2min = box_min_dist_sq(spec, dim, eta.center);
      if (d2min > 0.0 && t12 != 0.0) return std::nullopt;
      const double tr_t2 =
          t11 * t11 + 2.0 * t12 * t12 + (dim == 2 ? t22 * t22 : 0.0);
      c.eta0 =
          2.0 * std::abs(eta.c) * std::sqrt(box_max_dist_sq(spec, dim, eta.center));
      double w2min = 0.0;
      const double tdiag[2] = {t11, t22};
      for (int a = 0; a < dim; ++a) {
        const double clamped = std::clamp(eta.center[a], 0.0, spec.lengths[a]);
        const double d = eta.center[a] - clamped;
        w2min += tdiag[a] * tdiag[a] * d * d;
      }
      c.C0 = eta.c * tr_t2 - eta.c * eta.c * w2min;
      break;
    }
    case EtaPreset::Kind::tabulated:
      return std::nullopt;
  }
  return c;
}

}  // namespace divform
