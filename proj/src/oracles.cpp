#include "divform/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace divform {

OracleSpectrum dirichlet_box_spectrum(std::span<const double> lengths,
                                      int count) {
  if (count < 1) throw std::invalid_argument("dirichlet_box_spectrum: count");
  const int dim = static_cast<int>(lengths.size());
  if (dim < 1 || dim > 2) {
    throw std::invalid_argument("dirichlet_box_spectrum: dimension");
  }
  const double pi2 = std::numbers::pi * std::numbers::pi;
  std::vector<double> values;
  const int modes = count + 2;
  if (dim == 1) {
    for (int p = 1; p <= modes; ++p) {
      values.push_back(pi2 * p * p / (lengths[0] * lengths[0]));
    }
  } else {
    // p, q <= count+2 always covers the `count` smallest values.
    for (int p = 1; p <= modes; ++p) {
      for (int q = 1; q <= modes; ++q) {
        values.push_back(pi2 * (p * p / (lengths[0] * lengths[0]) +
                                q * q / (lengths[1] * lengths[1])));
      }
    }
  }
  std::sort(values.begin(), values.end());
  OracleSpectrum s;
  s.tag = "dirichlet_box";
  s.provenance = "separation of variables";
  s.values = Eigen::Map<Eigen::VectorXd>(values.data(), count);
  return s;
}

namespace {

// cos(k) cosh(k) - 1 rescaled by sech(k) so the evaluation stays O(1):
// g(k) = cos(k) - sech(k), same roots for k > 0.
double beam_g(double k) {
  const double e = std::exp(-k);
  return std::cos(k) - 2.0 * e / (1.0 + e * e);
}

}  // namespace

double beam_characteristic_root(int index) {
  if (index < 1) throw std::invalid_argument("beam root index must be >= 1");
  // The i-th positive root lies within 1/2 of (i + 1/2) pi, alternating side.
  const double center = (index + 0.5) * std::numbers::pi;
  double lo = center - 0.5, hi = center + 0.5;
  double flo = beam_g(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = beam_g(mid);
    if ((flo <= 0.0) == (fmid <= 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15 * center) break;
  }
  return 0.5 * (lo + hi);
}

OracleSpectrum clamped_beam_spectrum(double length, int count) {
  if (!(length > 0.0)) {
    throw std::invalid_argument("clamped_beam_spectrum: length must be > 0");
  }
  if (count < 1) throw std::invalid_argument("clamped_beam_spectrum: count");
  OracleSpectrum s;
  s.tag = "clamped_beam";
  s.provenance = "bisection on cos(k) cosh(k) = 1";
  s.values.resize(count);
  for (int i = 1; i <= count; ++i) {
    const double k = beam_characteristic_root(i) / length;
    s.values[i - 1] = k * k * k * k;
  }
  return s;
}

OracleSpectrum fd1d_dirichlet_spectrum(int cells, double t, double length) {
  if (cells < 2) throw std::invalid_argument("fd1d_dirichlet_spectrum: cells");
  if (!(t > 0.0) || !(length > 0.0)) {
    throw std::invalid_argument("fd1d_dirichlet_spectrum: needs t, L > 0");
  }
  const double h = length / cells;
  OracleSpectrum s;
  s.tag = "fd1d_dirichlet";
  s.provenance = "closed-form tridiagonal eigenvalues";
  s.values.resize(cells - 1);
  for (int p = 1; p < cells; ++p) {
    const double sn = std::sin(p * std::numbers::pi * h / (2.0 * length));
    s.values[p - 1] = t * 4.0 / (h * h) * sn * sn;
  }
  return s;
}

}  // namespace divform
