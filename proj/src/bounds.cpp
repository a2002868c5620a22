#include "divform/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace divform {

namespace {

void require_sorted_positive(const Eigen::VectorXd& v, const char* what) {
  for (int i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) {
      throw std::invalid_argument(std::string(what) +
                                  ": eigenvalues must be positive");
    }
    if (i > 0 && v[i] < v[i - 1]) {
      throw std::invalid_argument(std::string(what) +
                                  ": eigenvalues must be ascending");
    }
  }
}

void require_count(const Eigen::VectorXd& v, int count, const char* what) {
  if (v.size() < count) {
    throw std::invalid_argument(std::string(what) + ": need at least " +
                                std::to_string(count) + " eigenvalues, got " +
                                std::to_string(v.size()));
  }
}

std::vector<double> echo(const Eigen::VectorXd& v, int count) {
  return {v.data(), v.data() + std::min<int>(count, v.size())};
}

void finish(CheckRecord& r, const Margin& margin) {
  r.slack = r.rhs - r.lhs;
  r.margin = margin.value(r.lhs, r.rhs);
  r.pass = r.slack >= -r.margin;
}

// Fourth-order bracket factors.
double factor_wide(double gamma, const OperatorConstants& c, int n) {
  return (2.0 * n + 4.0) * c.delta * std::sqrt(gamma) +
         n * n * c.H0 * c.H0 + c.T0 * c.T0 + 4.0 * c.C0;
}
double factor_narrow(double gamma, const OperatorConstants& c, int n) {
  return 4.0 * c.delta * std::sqrt(gamma) + n * n * c.H0 * c.H0 +
         c.T0 * c.T0 + 4.0 * c.C0;
}

}  // namespace

double Margin::value(double lhs, double rhs) const {
  return absolute + relative * std::max(std::abs(lhs), std::abs(rhs));
}

CheckRecord yang_quadratic_check(const Eigen::VectorXd& sigma, int k,
                                 const OperatorConstants& consts, double alpha,
                                 int n, const Eigen::VectorXd& div_norms_sq,
                                 const Margin& margin, bool relaxed) {
  require_sorted_positive(sigma, "yang_quadratic_check");
  require_count(sigma, k + 1, "yang_quadratic_check");
  if (!relaxed && alpha > 0.0 && div_norms_sq.size() < k) {
    throw std::invalid_argument(
        "yang_quadratic_check: missing divergence norms");
  }
  CheckRecord r;
  r.name = relaxed ? "yang_quadratic_relaxed" : "yang_quadratic";
  r.k = k;
  r.alpha = alpha;
  r.n = n;
  r.t0_power = 2;  // printed form of the quadratic estimate
  r.constants = consts;
  r.spectrum_used = echo(sigma, k + 1);

  const double shift =
      (consts.T0 * consts.T0 + 4.0 * consts.C0) / (4.0 * consts.delta);
  const double coeff = 4.0 * consts.delta * (n * consts.delta + alpha) /
                       (static_cast<double>(n) * n * consts.epsilon *
                        consts.epsilon);
  const double top = sigma[k];
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < k; ++i) {
    const double gap = top - sigma[i];
    const double divI = (relaxed || alpha == 0.0) ? 0.0 : div_norms_sq[i];
    lhs += gap * gap;
    rhs += gap * (sigma[i] - alpha * divI + shift);
  }
  r.lhs = lhs;
  r.rhs = coeff * rhs;
  finish(r, margin);
  return r;
}

CheckRecord lower_order_sum_check(const Eigen::VectorXd& sigma,
                                  const OperatorConstants& consts,
                                  double alpha, int n, double d1, int t0_power,
                                  const Margin& margin, bool relaxed) {
  require_sorted_positive(sigma, "lower_order_sum_check");
  require_count(sigma, n + 1, "lower_order_sum_check");
  CheckRecord r;
  r.name = relaxed ? "lower_order_sum_relaxed" : "lower_order_sum";
  r.k = n;
  r.alpha = alpha;
  r.n = n;
  r.t0_power = t0_power;
  r.constants = consts;
  r.spectrum_used = echo(sigma, n + 1);

  double lhs = 0.0;
  for (int i = 1; i <= n; ++i) lhs += sigma[i] - sigma[0];
  const double coeff = 4.0 * consts.delta * (consts.delta + alpha) /
                       (consts.epsilon * consts.epsilon);
  r.lhs = lhs;
  r.rhs = coeff * (sigma[0] + d1);
  finish(r, margin);
  return r;
}

BoundRecord next_eigenvalue_bound(const Eigen::VectorXd& sigma, int k,
                                  double d0, const OperatorConstants& consts,
                                  double alpha, int n, int t0_power,
                                  const Margin& margin, bool relaxed) {
  require_sorted_positive(sigma, "next_eigenvalue_bound");
  require_count(sigma, k, "next_eigenvalue_bound");
  BoundRecord r;
  r.name = relaxed ? "next_eigenvalue_bound_relaxed" : "next_eigenvalue_bound";
  r.k = k;
  r.alpha = alpha;
  r.n = n;
  r.t0_power = t0_power;
  r.shift = d0;
  r.constants = consts;
  r.spectrum_used = echo(sigma, std::min<int>(k + 1, sigma.size()));
  r.observed = sigma.size() > k ? sigma[k] : std::nan("");
  r.gap_observed = sigma.size() > k ? sigma[k] - sigma[k - 1] : std::nan("");

  for (int i = 0; i < k; ++i) {
    if (!(sigma[i] + d0 > 0.0)) {
      r.skipped = true;
      r.pass = true;
      r.note = "skipped: sigma_" + std::to_string(i + 1) +
               " + D0 <= 0, the quadratic solution step needs positive "
               "shifted eigenvalues";
      return r;
    }
  }

  const double c = 2.0 * consts.delta * (n * consts.delta + alpha) /
                   (consts.epsilon * consts.epsilon * n * n);
  const double mean_sigma = sigma.head(k).mean();
  const double avg = mean_sigma + d0;
  const double var =
      (sigma.head(k).array() - mean_sigma).square().sum() / k;
  double disc = (c * avg) * (c * avg) - (1.0 + 2.0 * c) * var;
  if (disc < 0.0) {
    r.discriminant_clamped = true;
    r.note = "discriminant clamped at zero";
    disc = 0.0;
  }
  r.predicted = (1.0 + c) * avg + std::sqrt(disc) - d0;
  r.gap_bound = 2.0 * std::sqrt(disc);
  r.margin = margin.value(std::isnan(r.observed) ? r.predicted : r.observed,
                          r.predicted);
  if (std::isnan(r.observed)) {
    r.pass = true;
    r.note = "no observed next eigenvalue supplied";
  } else {
    r.pass = r.observed <= r.predicted + r.margin &&
             r.gap_observed <= r.gap_bound + r.margin;
  }
  return r;
}

BoundRecord recursion_eigenvalue_bound(const Eigen::VectorXd& sigma, int k,
                                       double d0,
                                       const OperatorConstants& consts,
                                       double alpha, int n, int t0_power,
                                       const Margin& margin, bool relaxed) {
  require_sorted_positive(sigma, "recursion_eigenvalue_bound");
  require_count(sigma, 1, "recursion_eigenvalue_bound");
  BoundRecord r;
  r.name = relaxed ? "recursion_bound_relaxed" : "recursion_bound";
  r.k = k;
  r.alpha = alpha;
  r.n = n;
  r.t0_power = t0_power;
  r.shift = d0;
  r.constants = consts;
  r.spectrum_used = echo(sigma, std::min<int>(k + 1, sigma.size()));
  r.observed = sigma.size() > k ? sigma[k] : std::nan("");
  r.gap_bound = std::nan("");
  r.gap_observed = std::nan("");

  if (!(sigma[0] + d0 > 0.0)) {
    r.skipped = true;
    r.pass = true;
    r.note = "skipped: sigma_1 + D0 <= 0";
    return r;
  }
  const double expo = 2.0 * consts.delta * (n * consts.delta + alpha) /
                      (consts.epsilon * consts.epsilon * n * n);
  const double coeff = 1.0 + 2.0 * expo;
  r.predicted =
      coeff * std::pow(static_cast<double>(k), expo) * (sigma[0] + d0) - d0;
  r.margin = margin.value(std::isnan(r.observed) ? r.predicted : r.observed,
                          r.predicted);
  if (std::isnan(r.observed)) {
    r.pass = true;
    r.note = "no observed next eigenvalue supplied";
  } else {
    r.pass = r.observed <= r.predicted + r.margin;
  }
  return r;
}

CheckRecord fourth_order_product_check(const Eigen::VectorXd& gamma, int k,
                                       const OperatorConstants& consts, int n,
                                       const Margin& margin) {
  require_sorted_positive(gamma, "fourth_order_product_check");
  require_count(gamma, k + 1, "fourth_order_product_check");
  CheckRecord r;
  r.name = "fourth_order_product";
  r.k = k;
  r.n = n;
  r.constants = consts;
  r.spectrum_used = echo(gamma, k + 1);

  const double top = gamma[k];
  double lhs = 0.0, wide = 0.0, narrow = 0.0;
  for (int i = 0; i < k; ++i) {
    const double gap = top - gamma[i];
    lhs += gap * gap;
    wide += gap * gap * factor_wide(gamma[i], consts, n);
    narrow += gap * factor_narrow(gamma[i], consts, n);
  }
  r.lhs = lhs;
  r.rhs = std::sqrt(wide) * std::sqrt(narrow) / (n * consts.epsilon);
  finish(r, margin);
  return r;
}

CheckRecord fourth_order_lower_check(const Eigen::VectorXd& gamma, int k,
                                     const OperatorConstants& consts, int n,
                                     LowerOrderReading reading,
                                     const Margin& margin) {
  require_sorted_positive(gamma, "fourth_order_lower_check");
  CheckRecord r;
  r.n = n;
  r.constants = consts;

  double lhs = 0.0;
  if (reading == LowerOrderReading::printed) {
    require_count(gamma, k + 1, "fourth_order_lower_check");
    r.name = "fourth_order_lower_printed";
    r.k = k;
    lhs = k * std::sqrt(gamma[k] - gamma[0]);
    r.spectrum_used = echo(gamma, k + 1);
  } else {
    require_count(gamma, n + 1, "fourth_order_lower_check");
    r.name = "fourth_order_lower_shifted";
    r.k = n;
    for (int i = 1; i <= n; ++i) lhs += std::sqrt(gamma[i] - gamma[0]);
    r.spectrum_used = echo(gamma, n + 1);
  }
  r.lhs = lhs;
  r.rhs = std::sqrt(factor_narrow(gamma[0], consts, n)) *
          std::sqrt(factor_wide(gamma[0], consts, n)) / consts.epsilon;
  finish(r, margin);
  return r;
}

CheckRecord fourth_order_quadratic_check(const Eigen::VectorXd& gamma, int k,
                                         const OperatorConstants& consts,
                                         int n, const Margin& margin) {
  require_sorted_positive(gamma, "fourth_order_quadratic_check");
  require_count(gamma, k + 1, "fourth_order_quadratic_check");
  CheckRecord r;
  r.name = "fourth_order_quadratic";
  r.k = k;
  r.n = n;
  r.constants = consts;
  r.spectrum_used = echo(gamma, k + 1);

  const double top = gamma[k];
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < k; ++i) {
    const double gap = top - gamma[i];
    lhs += gap * gap;
    rhs += gap * factor_wide(gamma[i], consts, n) *
           factor_narrow(gamma[i], consts, n);
  }
  r.lhs = lhs;
  r.rhs = rhs / (static_cast<double>(n) * n * consts.epsilon * consts.epsilon);
  finish(r, margin);
  return r;
}

BoundRecord fourth_order_eigenvalue_bound(const Eigen::VectorXd& gamma, int k,
                                          const OperatorConstants& consts,
                                          int n, const Margin& margin) {
  require_sorted_positive(gamma, "fourth_order_eigenvalue_bound");
  require_count(gamma, k, "fourth_order_eigenvalue_bound");
  BoundRecord r;
  r.name = "fourth_order_bound";
  r.k = k;
  r.n = n;
  r.constants = consts;
  r.spectrum_used = echo(gamma, std::min<int>(k + 1, gamma.size()));
  r.observed = gamma.size() > k ? gamma[k] : std::nan("");
  r.gap_observed = gamma.size() > k ? gamma[k] - gamma[k - 1] : std::nan("");

  const double n2e2 =
      static_cast<double>(n) * n * consts.epsilon * consts.epsilon;
  double sum_ff = 0.0, sum_gff = 0.0;
  for (int i = 0; i < k; ++i) {
    const double ff =
        factor_wide(gamma[i], consts, n) * factor_narrow(gamma[i], consts, n);
    sum_ff += ff;
    sum_gff += gamma[i] * ff;
  }
  r.a_k = sum_ff / (2.0 * n2e2 * k) + gamma.head(k).mean();
  r.b_k = sum_gff / (n2e2 * k) + gamma.head(k).array().square().mean();
  double disc = r.a_k * r.a_k - r.b_k;
  if (disc < 0.0) {
    r.discriminant_clamped = true;
    r.note = "negative discriminant flagged (clamped at zero)";
    disc = 0.0;
  }
  r.predicted = r.a_k + std::sqrt(disc);
  r.gap_bound = 2.0 * std::sqrt(disc);
  r.margin = margin.value(std::isnan(r.observed) ? r.predicted : r.observed,
                          r.predicted);
  if (std::isnan(r.observed)) {
    r.pass = true;
    r.note = "no observed next eigenvalue supplied";
  } else {
    r.pass = r.observed <= r.predicted + r.margin &&
             r.gap_observed <= r.gap_bound + r.margin;
  }
  return r;
}

CheckRecord jost_check(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                       const Eigen::VectorXd& c) {
  const int m = static_cast<int>(a.size());
  if (b.size() != m || c.size() != m || m < 1) {
    throw std::invalid_argument("jost_check: sequences must share a length");
  }
  for (int i = 0; i < m; ++i) {
    if (a[i] < 0.0 || b[i] < 0.0 || c[i] < 0.0) {
      throw std::invalid_argument("jost_check: sequences must be nonnegative");
    }
    if (i > 0 && (a[i] > a[i - 1] || b[i] < b[i - 1] || c[i] < c[i - 1])) {
      throw std::invalid_argument(
          "jost_check: need a decreasing, b and c increasing");
    }
  }
  CheckRecord r;
  r.name = "jost";
  r.k = m;
  const double sum_a2b = (a.array().square() * b.array()).sum();
  const double sum_ac = (a.array() * c.array()).sum();
  const double sum_a2 = a.array().square().sum();
  const double sum_abc = (a.array() * b.array() * c.array()).sum();
  r.lhs = sum_a2b * sum_ac;
  r.rhs = sum_a2 * sum_abc;
  finish(r, Margin{0.0, 1e-12});
  return r;
}

BaselineChecks clamped_baseline_checks(const Eigen::VectorXd& gamma, int k,
                                       double H0, int n, const Margin& margin) {
  require_sorted_positive(gamma, "clamped_baseline_checks");
  require_count(gamma, k + 1, "clamped_baseline_checks");
  BaselineChecks out;
  const double top = gamma[k];
  const double curv = n * n * H0 * H0;

  double lhs = 0.0;
  double cheng_rhs = 0.0, wx_first = 0.0, wx_second = 0.0;
  for (int i = 0; i < k; ++i) {
    const double gap = top - gamma[i];
    const double root = std::sqrt(gamma[i]);
    const double wide = (2.0 * n + 4.0) * root + curv;
    const double narrow = 4.0 * root + curv;
    lhs += gap * gap;
    cheng_rhs += gap * wide * narrow;
    wx_first += gap * gap * wide;
    wx_second += gap * narrow;
  }
  out.cheng.name = "clamped_baseline_cheng";
  out.cheng.k = k;
  out.cheng.n = n;
  out.cheng.lhs = lhs;
  out.cheng.rhs = cheng_rhs / (static_cast<double>(n) * n);
  out.cheng.spectrum_used = echo(gamma, k + 1);
  finish(out.cheng, margin);

  out.wang_xia.name = "clamped_baseline_wang_xia";
  out.wang_xia.k = k;
  out.wang_xia.n = n;
  out.wang_xia.lhs = lhs;
  out.wang_xia.rhs = std::sqrt(wx_first) * std::sqrt(wx_second) / n;
  out.wang_xia.spectrum_used = echo(gamma, k + 1);
  finish(out.wang_xia, margin);

  // The product bound is the sharper of the two on spectra satisfying it.
  out.ordering.name = "clamped_baseline_ordering";
  out.ordering.k = k;
  out.ordering.n = n;
  out.ordering.lhs = out.wang_xia.rhs;
  out.ordering.rhs = out.cheng.rhs;
  out.ordering.spectrum_used = echo(gamma, k + 1);
  finish(out.ordering, margin);
  return out;
}

}  // namespace divform
