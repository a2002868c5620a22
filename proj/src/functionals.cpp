#include "divform/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace divform {

double div_eta_norm_sq(const WeightedDivergence& div,
                       const Eigen::VectorXd& stacked) {
  if (stacked.size() != div.op.cols()) {
    throw std::invalid_argument("div_eta_norm_sq: field size mismatch");
  }
  const Eigen::VectorXd d = div.op * stacked;
  return d.dot(div.weights.asDiagonal() * d);
}

double div_eta_norm_sq(const DiscreteDomain& dom, const GridScalarField& eta,
                       const Eigen::VectorXd& stacked) {
  return div_eta_norm_sq(div_eta_operator(dom, eta), stacked);
}

ShiftSet shifts(double alpha, const Eigen::VectorXd& div_norms_sq,
                const OperatorConstants& consts, int k, int t0_power) {
  if (t0_power != 1 && t0_power != 2) {
    throw std::invalid_argument("shifts: t0_power must be 1 or 2");
  }
  if (alpha > 0.0 && div_norms_sq.size() < k) {
    throw std::invalid_argument(
        "shifts: need a divergence norm for each of the first k eigenpairs");
  }
  const double t0_term =
      t0_power == 1 ? consts.T0 : consts.T0 * consts.T0;
  const double base = (t0_term + 4.0 * consts.C0) / (4.0 * consts.delta);
  ShiftSet s;
  s.t0_power = t0_power;
  if (alpha > 0.0) {
    s.D0 = -alpha * div_norms_sq.head(k).minCoeff() + base;
    s.D1 = -alpha * div_norms_sq[0] + base;
  } else {
    s.D0 = base;
    s.D1 = base;
  }
  return s;
}

}  // namespace divform
