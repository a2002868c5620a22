#pragma once

#include <Eigen/Core>

#include "divform/assembly.hpp"
#include "divform/constants.hpp"
#include "divform/domain.hpp"
#include "divform/fields.hpp"

namespace divform {

/// Discrete weighted L2 norm squared of div_eta u for a vector-valued grid
/// function given as stacked interior components (dim * interior entries),
/// extended by zero to the boundary. Always >= 0.
double div_eta_norm_sq(const DiscreteDomain& dom, const GridScalarField& eta,
                       const Eigen::VectorXd& stacked);

/// Same, reusing a prebuilt divergence operator.
double div_eta_norm_sq(const WeightedDivergence& div,
                       const Eigen::VectorXd& stacked);

/// The eigenvalue shifts entering the second-order bounds:
///   D0 = -alpha * min_{j<=k} ||div_eta u_j||^2 + (T0^p + 4 C0) / (4 delta)
///   D1 = -alpha * ||div_eta u_1||^2        + (T0^p + 4 C0) / (4 delta)
/// with p = t0_power in {1, 2}; p = 1 is the printed form, p = 2 the
/// dimensionally consistent variant. Both agree whenever T0 is 0 or 1.
struct ShiftSet {
  double D0 = 0.0;
  double D1 = 0.0;
  int t0_power = 1;
};

ShiftSet shifts(double alpha, const Eigen::VectorXd& div_norms_sq,
                const OperatorConstants& consts, int k, int t0_power);

}  // namespace divform
