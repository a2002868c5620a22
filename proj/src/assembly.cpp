#include "divform/assembly.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "divform/grid_calculus.hpp"

namespace divform {

namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;

// Relative max-norm asymmetry; the matrix is replaced by its symmetric part.
double symmetrize(Eigen::SparseMatrix<double>& k, double tol,
                  const char* what) {
  Eigen::SparseMatrix<double> kt = k.transpose();
  Eigen::SparseMatrix<double> diff = k - kt;
  double num = 0.0, den = 0.0;
  for (int c = 0; c < diff.outerSize(); ++c) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(diff, c); it; ++it) {
      num = std::max(num, std::abs(it.value()));
    }
  }
  for (int c = 0; c < k.outerSize(); ++c) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(k, c); it; ++it) {
      den = std::max(den, std::abs(it.value()));
    }
  }
  const double defect = den > 0.0 ? num / den : 0.0;
  if (defect > tol) {
    throw std::runtime_error(std::string(what) + ": symmetry defect " +
                             std::to_string(defect) + " exceeds tolerance");
  }
  k = 0.5 * (k + kt);
  k.prune(0.0);
  return defect;
}

Eigen::VectorXd node_weights(const GridScalarField& eta) {
  return (-eta.values.array()).exp();
}

Eigen::VectorXd interior_mass(const DiscreteDomain& dom,
                              const Eigen::VectorXd& w) {
  Eigen::VectorXd m(dom.num_interior());
  for (int p = 0; p < dom.num_interior(); ++p) {
    m[p] = w[dom.interior_nodes()[p]] * dom.cell_volume();
  }
  return m;
}

// Stiffness triplets of the weighted second-order form over interior nodes.
// Diagonal tensor entries: flux faces with arithmetically averaged
// coefficients. Off-diagonal entry (2-D): centered cross-derivative stencil.
Triplets scalar_stiffness_triplets(const DiscreteDomain& dom,
                                   const GridTensorField& T,
                                   const Eigen::VectorXd& w) {
  const double vol = dom.cell_volume();
  const int per = dom.nodes_per_axis();
  Triplets trip;
  trip.reserve(static_cast<size_t>(dom.num_interior()) * 9);

  auto face_coeff = [&](int node_a, int node_b, int axis) {
    return 0.5 * (w[node_a] * T.comp(node_a, axis, axis) +
                  w[node_b] * T.comp(node_b, axis, axis));
  };

  for (int p = 0; p < dom.num_interior(); ++p) {
    const int node = dom.interior_nodes()[p];
    for (int axis = 0; axis < dom.dim(); ++axis) {
      const int stride = axis == 0 ? 1 : per;
      const double h2 = dom.spacing(axis) * dom.spacing(axis);
      const int up = node + stride, down = node - stride;
      const double c_up = face_coeff(node, up, axis);
      const double c_down = face_coeff(node, down, axis);
      trip.emplace_back(p, p, vol * (c_up + c_down) / h2);
      if (const int q = dom.interior_index(up); q >= 0) {
        trip.emplace_back(p, q, -vol * c_up / h2);
      }
      if (const int q = dom.interior_index(down); q >= 0) {
        trip.emplace_back(p, q, -vol * c_down / h2);
      }
    }
    if (dom.dim() == 2) {
      const int ix = dom.axis_index(node, 0), iy = dom.axis_index(node, 1);
      const double denom = 4.0 * dom.spacing(0) * dom.spacing(1);
      auto c12 = [&](int jx, int jy) {
        const int m = dom.node_index(jx, jy);
        return w[m] * T.comp(m, 0, 1);
      };
      const double ce = c12(ix + 1, iy), cw = c12(ix - 1, iy);
      const double cn = c12(ix, iy + 1), cs = c12(ix, iy - 1);
      auto add = [&](int jx, int jy, double value) {
        if (value == 0.0) return;
        const int q = dom.interior_index(dom.node_index(jx, jy));
        if (q >= 0) trip.emplace_back(p, q, value);
      };
      add(ix + 1, iy + 1, -vol * (ce + cn) / denom);
      add(ix - 1, iy - 1, -vol * (cw + cs) / denom);
      add(ix + 1, iy - 1, vol * (ce + cs) / denom);
      add(ix - 1, iy + 1, vol * (cw + cn) / denom);
    }
  }
  return trip;
}

}  // namespace

Pencil assemble_scalar(const DiscreteDomain& dom, const GridTensorField& T,
                       const GridScalarField& eta) {
  T.validate();
  const Eigen::VectorXd w = node_weights(eta);
  const int ni = dom.num_interior();

  Pencil pencil;
  pencil.kind = ProblemKind::scalar_second_order;
  pencil.components = 1;
  pencil.interior_count = ni;
  pencil.mass = interior_mass(dom, w);

  const Triplets trip = scalar_stiffness_triplets(dom, T, w);
  pencil.stiffness.resize(ni, ni);
  pencil.stiffness.setFromTriplets(trip.begin(), trip.end());
  pencil.symmetry_defect = symmetrize(pencil.stiffness, 1e-12, "assemble_scalar");
  return pencil;
}

WeightedDivergence div_eta_operator(const DiscreteDomain& dom,
                                    const GridScalarField& eta) {
  const int ni = dom.num_interior();
  const int dim = dom.dim();
  const int per = dom.nodes_per_axis();
  const Eigen::MatrixXd grad_eta = node_gradient(dom, eta.values);

  Triplets trip;
  trip.reserve(static_cast<size_t>(ni) * (3 * dim));
  for (int p = 0; p < ni; ++p) {
    const int node = dom.interior_nodes()[p];
    for (int a = 0; a < dim; ++a) {
      const int stride = a == 0 ? 1 : per;
      const double inv2h = 1.0 / (2.0 * dom.spacing(a));
      if (const int q = dom.interior_index(node + stride); q >= 0) {
        trip.emplace_back(p, a * ni + q, inv2h);
      }
      if (const int q = dom.interior_index(node - stride); q >= 0) {
        trip.emplace_back(p, a * ni + q, -inv2h);
      }
      trip.emplace_back(p, a * ni + p, -grad_eta(node, a));
    }
  }
  WeightedDivergence div;
  div.op.resize(ni, dim * ni);
  div.op.setFromTriplets(trip.begin(), trip.end());
  div.weights = interior_mass(dom, node_weights(eta));
  return div;
}

Pencil assemble_vector_system(const DiscreteDomain& dom,
                              const GridTensorField& T,
                              const GridScalarField& eta, double alpha) {
  if (dom.kind() == DomainKind::arc) {
    throw std::invalid_argument(
        "assemble_vector_system: the coupled system is posed on boxes, not arcs");
  }
  if (alpha < 0.0) {
    throw std::invalid_argument("assemble_vector_system: alpha must be >= 0");
  }
  const Pencil scalar = assemble_scalar(dom, T, eta);
  const int ni = scalar.size();
  const int dim = dom.dim();

  Pencil pencil;
  pencil.kind = ProblemKind::second_order_system;
  pencil.alpha = alpha;
  pencil.components = dim;
  pencil.interior_count = ni;

  pencil.mass.resize(dim * ni);
  for (int a = 0; a < dim; ++a) pencil.mass.segment(a * ni, ni) = scalar.mass;

  Triplets trip;
  trip.reserve(static_cast<size_t>(dim) * scalar.stiffness.nonZeros());
  for (int c = 0; c < scalar.stiffness.outerSize(); ++c) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(scalar.stiffness, c);
         it; ++it) {
      for (int a = 0; a < dim; ++a) {
        trip.emplace_back(a * ni + static_cast<int>(it.row()),
                          a * ni + static_cast<int>(it.col()), it.value());
      }
    }
  }
  pencil.stiffness.resize(dim * ni, dim * ni);
  pencil.stiffness.setFromTriplets(trip.begin(), trip.end());

  if (alpha > 0.0) {
    const WeightedDivergence div = div_eta_operator(dom, eta);
    Eigen::SparseMatrix<double> coupling =
        div.op.transpose() * div.weights.asDiagonal() * div.op;
    pencil.stiffness += alpha * coupling;
  }
  pencil.symmetry_defect =
      symmetrize(pencil.stiffness, 1e-12, "assemble_vector_system");
  return pencil;
}

namespace {

// Even reflection across the boundary planes: maps an out-of-grid axis index
// to its mirror image inside.
int reflect(int idx, int n) {
  if (idx < 0) return -idx;
  if (idx > n) return 2 * n - idx;
  return idx;
}

// The second-order operator applied at every node of the extended grid:
// rows are all nodes, columns interior unknowns. Boundary values are zero and
// ghost nodes carry the even reflection of u; coefficient fields are also
// evenly reflected.
Eigen::SparseMatrix<double> clamped_first_application(
    const DiscreteDomain& dom, const GridTensorField& T,
    const Eigen::VectorXd& w) {
  const int n = dom.cells();
  Triplets trip;

  auto node_at = [&](int ix, int iy) {
    return dom.node_index(reflect(ix, n), dom.dim() == 2 ? reflect(iy, n) : 0);
  };
  auto coeff = [&](int ix, int iy, int axis) {
    const int m = node_at(ix, iy);
    return w[m] * T.comp(m, axis, axis);
  };
  auto add_u = [&](Triplets& out, int row, int ix, int iy, double value) {
    if (value == 0.0) return;
    const int q = dom.interior_index(node_at(ix, iy));
    if (q >= 0) out.emplace_back(row, q, value);
  };

  for (int node = 0; node < dom.num_nodes(); ++node) {
    const int ix = dom.axis_index(node, 0);
    const int iy = dom.dim() == 2 ? dom.axis_index(node, 1) : 0;
    const double escale = 1.0 / w[node];  // e^{eta}
    for (int axis = 0; axis < dom.dim(); ++axis) {
      const double h2 = dom.spacing(axis) * dom.spacing(axis);
      const int dx = axis == 0 ? 1 : 0, dy = axis == 0 ? 0 : 1;
      const double c_up = 0.5 * (coeff(ix, iy, axis) +
                                 coeff(ix + dx, iy + dy, axis));
      const double c_down = 0.5 * (coeff(ix, iy, axis) +
                                   coeff(ix - dx, iy - dy, axis));
      add_u(trip, node, ix + dx, iy + dy, escale * c_up / h2);
      add_u(trip, node, ix - dx, iy - dy, escale * c_down / h2);
      add_u(trip, node, ix, iy, -escale * (c_up + c_down) / h2);
    }
    if (dom.dim() == 2) {
      const double denom = 4.0 * dom.spacing(0) * dom.spacing(1);
      auto c12 = [&](int jx, int jy) {
        const int m = node_at(jx, jy);
        return w[m] * T.comp(m, 0, 1);
      };
      const double ce = c12(ix + 1, iy), cw = c12(ix - 1, iy);
      const double cn = c12(ix, iy + 1), cs = c12(ix, iy - 1);
      if (ce != 0.0 || cw != 0.0 || cn != 0.0 || cs != 0.0) {
        add_u(trip, node, ix + 1, iy + 1, escale * (ce + cn) / denom);
        add_u(trip, node, ix - 1, iy - 1, escale * (cw + cs) / denom);
        add_u(trip, node, ix + 1, iy - 1, -escale * (ce + cs) / denom);
        add_u(trip, node, ix - 1, iy + 1, -escale * (cw + cn) / denom);
      }
    }
  }
  Eigen::SparseMatrix<double> a1(dom.num_nodes(), dom.num_interior());
  a1.setFromTriplets(trip.begin(), trip.end());
  return a1;
}

// The same operator applied at interior nodes to a field known on the whole
// grid (no boundary condition on the input).
Eigen::SparseMatrix<double> clamped_second_application(
    const DiscreteDomain& dom, const GridTensorField& T,
    const Eigen::VectorXd& w) {
  const int per = dom.nodes_per_axis();
  Triplets trip;
  for (int p = 0; p < dom.num_interior(); ++p) {
    const int node = dom.interior_nodes()[p];
    const double escale = 1.0 / w[node];
    for (int axis = 0; axis < dom.dim(); ++axis) {
      const int stride = axis == 0 ? 1 : per;
      const double h2 = dom.spacing(axis) * dom.spacing(axis);
      const int up = node + stride, down = node - stride;
      const double c_up =
          0.5 * (w[node] * T.comp(node, axis, axis) + w[up] * T.comp(up, axis, axis));
      const double c_down = 0.5 * (w[node] * T.comp(node, axis, axis) +
                                   w[down] * T.comp(down, axis, axis));
      trip.emplace_back(p, up, escale * c_up / h2);
      trip.emplace_back(p, down, escale * c_down / h2);
      trip.emplace_back(p, node, -escale * (c_up + c_down) / h2);
    }
    if (dom.dim() == 2) {
      const int ix = dom.axis_index(node, 0), iy = dom.axis_index(node, 1);
      const double denom = 4.0 * dom.spacing(0) * dom.spacing(1);
      auto c12 = [&](int jx, int jy) {
        const int m = dom.node_index(jx, jy);
        return w[m] * T.comp(m, 0, 1);
      };
      const double ce = c12(ix + 1, iy), cw = c12(ix - 1, iy);
      const double cn = c12(ix, iy + 1), cs = c12(ix, iy - 1);
      if (ce != 0.0 || cw != 0.0 || cn != 0.0 || cs != 0.0) {
        auto add = [&](int jx, int jy, double value) {
          trip.emplace_back(p, dom.node_index(jx, jy), value);
        };
        add(ix + 1, iy + 1, escale * (ce + cn) / denom);
        add(ix - 1, iy - 1, escale * (cw + cs) / denom);
        add(ix + 1, iy - 1, -escale * (ce + cs) / denom);
        add(ix - 1, iy + 1, -escale * (cw + cn) / denom);
      }
    }
  }
  Eigen::SparseMatrix<double> a2(dom.num_interior(), dom.num_nodes());
  a2.setFromTriplets(trip.begin(), trip.end());
  return a2;
}

}  // namespace

Pencil assemble_fourth_order_clamped(const DiscreteDomain& dom,
                                     const GridTensorField& T,
                                     const GridScalarField& eta) {
  T.validate();
  if (dom.dim() == 2) {
    // The conormal ghost reflection is only exact when T is diagonal where
    // the reflection happens.
    double scale = 0.0;
    for (int node = 0; node < dom.num_nodes(); ++node) {
      scale = std::max(scale, T.max_eigenvalue(node));
    }
    for (int node = 0; node < dom.num_nodes(); ++node) {
      const int ix = dom.axis_index(node, 0), iy = dom.axis_index(node, 1);
      const bool near_boundary = ix <= 1 || ix >= dom.cells() - 1 ||
                                 iy <= 1 || iy >= dom.cells() - 1;
      if (near_boundary && std::abs(T.comp(node, 0, 1)) > 1e-12 * scale) {
        throw std::invalid_argument(
            "assemble_fourth_order_clamped: T must be diagonal within one "
            "cell of the boundary (offending node " + std::to_string(node) +
            ")");
      }
    }
  }
  const Eigen::VectorXd w = node_weights(eta);
  const Eigen::SparseMatrix<double> a1 = clamped_first_application(dom, T, w);
  const Eigen::SparseMatrix<double> a2 = clamped_second_application(dom, T, w);

  Pencil pencil;
  pencil.kind = ProblemKind::fourth_order_clamped;
  pencil.components = 1;
  pencil.interior_count = dom.num_interior();
  pencil.mass = interior_mass(dom, w);
  pencil.stiffness = pencil.mass.asDiagonal() * (a2 * a1);
  pencil.symmetry_defect =
      symmetrize(pencil.stiffness, 1e-8, "assemble_fourth_order_clamped");
  return pencil;
}

void dump_matrix_triplets(const Eigen::SparseMatrix<double>& m,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  char buf[64];
  for (int c = 0; c < m.outerSize(); ++c) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, c); it; ++it) {
      std::snprintf(buf, sizeof(buf), "%.17g", it.value());
      out << it.row() << ' ' << it.col() << ' ' << buf << '\n';
    }
  }
}

void dump_diagonal_triplets(const Eigen::VectorXd& diag,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  char buf[64];
  for (int i = 0; i < diag.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", diag[i]);
    out << i << ' ' << i << ' ' << buf << '\n';
  }
}

}  // namespace divform
