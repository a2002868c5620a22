#include "divform/fields.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace divform {

GridTensorField::GridTensorField(int dim, int num_nodes) : dim_(dim) {
  if (dim != 1 && dim != 2) {
    throw std::invalid_argument("tensor field: dimension must be 1 or 2");
  }
  comps_.setZero(num_nodes, dim == 1 ? 1 : 3);
}

Eigen::Matrix2d GridTensorField::matrix2(int node) const {
  Eigen::Matrix2d m;
  m << comps_(node, 0), comps_(node, 2), comps_(node, 2), comps_(node, 1);
  return m;
}

double GridTensorField::min_eigenvalue(int node) const {
  if (dim_ == 1) return comps_(node, 0);
  const double t11 = comps_(node, 0), t22 = comps_(node, 1),
               t12 = comps_(node, 2);
  const double mean = 0.5 * (t11 + t22);
  const double rad = std::hypot(0.5 * (t11 - t22), t12);
  return mean - rad;
}

double GridTensorField::max_eigenvalue(int node) const {
  if (dim_ == 1) return comps_(node, 0);
  const double t11 = comps_(node, 0), t22 = comps_(node, 1),
               t12 = comps_(node, 2);
  const double mean = 0.5 * (t11 + t22);
  const double rad = std::hypot(0.5 * (t11 - t22), t12);
  return mean + rad;
}

void GridTensorField::validate() const {
  for (int node = 0; node < num_nodes(); ++node) {
    if (!comps_.row(node).allFinite()) {
      throw std::invalid_argument("tensor field: non-finite entry at node " +
                                  std::to_string(node));
    }
    if (min_eigenvalue(node) <= 0.0) {
      throw std::invalid_argument(
          "tensor field: matrix not positive definite at node " +
          std::to_string(node) + " (smallest eigenvalue " +
          std::to_string(min_eigenvalue(node)) + ")");
    }
  }
}

GridScalarField sample_eta(const EtaPreset& preset, const DiscreteDomain& dom) {
  GridScalarField field;
  field.values.setZero(dom.num_nodes());
  switch (preset.kind) {
    case EtaPreset::Kind::zero:
      break;
    case EtaPreset::Kind::quadratic:
      for (int node = 0; node < dom.num_nodes(); ++node) {
        double r2 = 0.0;
        for (int a = 0; a < dom.dim(); ++a) {
          const double d = dom.coord(node, a) - preset.center[a];
          r2 += d * d;
        }
        field.values[node] = preset.c * r2;
      }
      break;
    case EtaPreset::Kind::linear:
      for (int node = 0; node < dom.num_nodes(); ++node) {
        double v = 0.0;
        for (int a = 0; a < dom.dim(); ++a) {
          v += preset.slope[a] * dom.coord(node, a);
        }
        field.values[node] = v;
      }
      break;
    case EtaPreset::Kind::tabulated:
      if (preset.table.size() != dom.num_nodes()) {
        throw std::invalid_argument(
            "eta preset: tabulated data has " +
            std::to_string(preset.table.size()) + " values, grid has " +
            std::to_string(dom.num_nodes()) + " nodes (no resampling)");
      }
      field.values = preset.table;
      break;
  }
  if (!field.values.allFinite()) {
    throw std::invalid_argument("eta preset: non-finite value sampled");
  }
  return field;
}

GridTensorField sample_tensor(const TensorPreset& preset,
                              const DiscreteDomain& dom) {
  GridTensorField field(dom.dim(), dom.num_nodes());
  switch (preset.kind) {
    case TensorPreset::Kind::identity:
      for (int node = 0; node < dom.num_nodes(); ++node) {
        for (int a = 0; a < dom.dim(); ++a) field.comp(node, a, a) = 1.0;
      }
      break;
    case TensorPreset::Kind::constant_diagonal:
      for (int node = 0; node < dom.num_nodes(); ++node) {
        for (int a = 0; a < dom.dim(); ++a) {
          field.comp(node, a, a) = preset.diag[a];
        }
      }
      break;
    case TensorPreset::Kind::rotated_diagonal: {
      if (dom.dim() != 2) {
        throw std::invalid_argument(
            "tensor preset: rotated_diagonal requires a 2-D box");
      }
      const double c = std::cos(preset.angle), s = std::sin(preset.angle);
      const double t11 = preset.a * c * c + preset.b * s * s;
      const double t22 = preset.a * s * s + preset.b * c * c;
      const double t12 = (preset.a - preset.b) * c * s;
      for (int node = 0; node < dom.num_nodes(); ++node) {
        field.comp(node, 0, 0) = t11;
        field.comp(node, 1, 1) = t22;
        field.comp(node, 0, 1) = t12;
      }
      break;
    }
    case TensorPreset::Kind::varying_diagonal:
      for (int node = 0; node < dom.num_nodes(); ++node) {
        for (int a = 0; a < dom.dim(); ++a) {
          const double x = dom.coord(node, a);
          field.comp(node, a, a) = 1.0 + preset.beta * x * x;
        }
      }
      break;
  }
  field.validate();
  return field;
}

}  // namespace divform
