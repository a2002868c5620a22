#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "divform/constants.hpp"

namespace divform {

/// Tolerance applied to a check: pass iff slack >= -margin with
/// margin = absolute + relative * max(|lhs|, |rhs|). Computed spectra use an
/// absolute margin of 3*max_i(residual_i * lambda_i) + 3*|Richardson error
/// estimate|; analytic spectra use a 1e-9 relative margin.
struct Margin {
  double absolute = 0.0;
  double relative = 0.0;
  double value(double lhs, double rhs) const;

  static Margin analytic() { return Margin{0.0, 1e-9}; }
};

struct CheckRecord {
  std::string name;
  int k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double margin = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string note;
  // inputs echo
  double alpha = 0.0;
  int n = 0;
  int t0_power = 0;
  OperatorConstants constants;
  std::vector<double> spectrum_used;
};

struct BoundRecord {
  std::string name;
  int k = 0;
  double predicted = 0.0;
  double observed = 0.0;   // next eigenvalue, NaN when not supplied
  double gap_bound = 0.0;  // NaN where undefined
  double gap_observed = 0.0;
  double margin = 0.0;
  bool pass = false;
  bool skipped = false;
  bool discriminant_clamped = false;
  double a_k = 0.0;  // fourth-order quadratic solution pieces
  double b_k = 0.0;
  std::string note;
  // inputs echo
  double alpha = 0.0;
  int n = 0;
  int t0_power = 0;
  double shift = 0.0;  // D0 used
  OperatorConstants constants;
  std::vector<double> spectrum_used;
};

/// Quadratic (Yang-type) inequality for the coupled second-order system:
///   sum_{i<=k} (s_{k+1}-s_i)^2 <=
///   4 delta (n delta + alpha) / (n^2 eps^2) *
///   sum (s_{k+1}-s_i) (s_i - alpha ||div_eta u_i||^2 + (T0^2 + 4 C0)/(4 delta)).
/// `div_norms_sq` may be empty (treated as zeros, the relaxed substitution,
/// which only enlarges the right side).
CheckRecord yang_quadratic_check(const Eigen::VectorXd& sigma, int k,
                                 const OperatorConstants& consts, double alpha,
                                 int n, const Eigen::VectorXd& div_norms_sq,
                                 const Margin& margin, bool relaxed = false);

/// Lower-order sum: sum_{i=1}^n (s_{i+1} - s_1) <=
/// 4 delta (delta + alpha) / eps^2 * (s_1 + D1).
CheckRecord lower_order_sum_check(const Eigen::VectorXd& sigma,
                                  const OperatorConstants& consts,
                                  double alpha, int n, double d1, int t0_power,
                                  const Margin& margin, bool relaxed = false);

/// Upper bound on s_{k+1} (and the consecutive gap) from the quadratic
/// inequality in the shifted eigenvalues v_i = s_i + D0. Requires v_i > 0 for
/// the first k values; otherwise returns a skipped record with a warning. A
/// negative discriminant is clamped to zero and flagged.
BoundRecord next_eigenvalue_bound(const Eigen::VectorXd& sigma, int k,
                                  double d0, const OperatorConstants& consts,
                                  double alpha, int n, int t0_power,
                                  const Margin& margin, bool relaxed = false);

/// Cheng-Yang recursion bound:
/// s_{k+1} + D0 <= (1 + 4 delta (n delta + alpha)/(eps^2 n^2)) *
///                 k^{2 delta (n delta + alpha)/(eps^2 n^2)} * (s_1 + D0).
BoundRecord recursion_eigenvalue_bound(const Eigen::VectorXd& sigma, int k,
                                       double d0,
                                       const OperatorConstants& consts,
                                       double alpha, int n, int t0_power,
                                       const Margin& margin,
                                       bool relaxed = false);

/// Fourth-order bracket factors:
///   F1(g) = (2n+4) delta sqrt(g) + n^2 H0^2 + T0^2 + 4 C0
///   F2(g) = 4 delta sqrt(g)      + n^2 H0^2 + T0^2 + 4 C0
/// Product inequality:
/// sum (G_{k+1}-G_i)^2 <= (1/(n eps)) * sqrt(sum (G_{k+1}-G_i)^2 F1(G_i))
///                                    * sqrt(sum (G_{k+1}-G_i)   F2(G_i)).
CheckRecord fourth_order_product_check(const Eigen::VectorXd& gamma, int k,
                                       const OperatorConstants& consts, int n,
                                       const Margin& margin);

/// The lower-order display admits two index readings; both are computed and
/// reported, neither is canonical.
///   printed: k * (G_{k+1} - G_1)^{1/2} <= (1/eps) sqrt(F2(G_1) F1(G_1))
///   shifted: sum_{i=1}^n (G_{i+1} - G_1)^{1/2} <= same right side
enum class LowerOrderReading { printed, shifted };
CheckRecord fourth_order_lower_check(const Eigen::VectorXd& gamma, int k,
                                     const OperatorConstants& consts, int n,
                                     LowerOrderReading reading,
                                     const Margin& margin);

/// Quadratic form of the product inequality:
/// sum (G_{k+1}-G_i)^2 <= (1/(n^2 eps^2)) sum (G_{k+1}-G_i) F1(G_i) F2(G_i).
CheckRecord fourth_order_quadratic_check(const Eigen::VectorXd& gamma, int k,
                                         const OperatorConstants& consts,
                                         int n, const Margin& margin);

/// Solving the quadratic inequality for G_{k+1}:
///   G_{k+1} <= A_k + sqrt(A_k^2 - B_k),  G_{k+1} - G_k <= 2 sqrt(A_k^2 - B_k)
///   A_k = (1/(2 n^2 eps^2 k)) sum F1 F2 + mean(G)
///   B_k = (1/(n^2 eps^2 k)) sum G_i F1 F2 + mean(G^2).
BoundRecord fourth_order_eigenvalue_bound(const Eigen::VectorXd& gamma, int k,
                                          const OperatorConstants& consts,
                                          int n, const Margin& margin);

/// Algebraic sequence inequality (a decreasing, b and c increasing, all
/// nonnegative): (sum a^2 b)(sum a c) <= (sum a^2)(sum a b c).
/// Monotonicity violations are errors.
CheckRecord jost_check(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                       const Eigen::VectorXd& c);

/// Clamped-plate baselines, applicable only when T = I and eta is constant:
/// the Cheng-et-al. quadratic inequality, the Wang-Xia product inequality,
/// and the ordering of their right sides (Wang-Xia <= Cheng-et-al.).
struct BaselineChecks {
  CheckRecord cheng;
  CheckRecord wang_xia;
  CheckRecord ordering;
};
BaselineChecks clamped_baseline_checks(const Eigen::VectorXd& gamma, int k,
                                       double H0, int n, const Margin& margin);

}  // namespace divform
