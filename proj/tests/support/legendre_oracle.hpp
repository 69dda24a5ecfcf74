#pragma once

// Independent evaluation of the real spherical harmonics through the
// associated-Legendre recursion in (theta, phi) with explicit trig
// azimuthal factors. Deliberately separate from the polynomial recursion
// used by the library.

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

// P_l^m(u) without the Condon-Shortley phase, for all l <= l_max at fixed m.
inline std::vector<double> assoc_legendre_column(int l_max, int m, double u) {
  std::vector<double> p(static_cast<std::size_t>(l_max + 1), 0.0);
  const double somx2 = std::sqrt(std::max(0.0, 1.0 - u * u));
  double pmm = 1.0;
  for (int k = 1; k <= m; ++k) pmm *= (2.0 * k - 1.0) * somx2;
  if (m <= l_max) p[static_cast<std::size_t>(m)] = pmm;
  if (m + 1 <= l_max)
    p[static_cast<std::size_t>(m + 1)] = u * (2.0 * m + 1.0) * pmm;
  for (int l = m + 2; l <= l_max; ++l) {
    p[static_cast<std::size_t>(l)] =
        ((2.0 * l - 1.0) * u * p[static_cast<std::size_t>(l - 1)] -
         (l + m - 1.0) * p[static_cast<std::size_t>(l - 2)]) /
        (l - m);
  }
  return p;
}

// Y_{l,m}(u) for unit u, m = -l..l, in the library's convention: orthonormal,
// positive-m components carry the Condon-Shortley (-1)^m.
inline Eigen::VectorXd real_sph_trig(int l, const Eigen::Vector3d& unit) {
  const double theta = std::acos(std::clamp(unit.z(), -1.0, 1.0));
  const double phi = std::atan2(unit.y(), unit.x());
  const double ct = std::cos(theta);

  Eigen::VectorXd out(2 * l + 1);
  for (int m = 0; m <= l; ++m) {
    const auto p = assoc_legendre_column(l, m, ct);
    double norm = (2.0 * l + 1.0) / (4.0 * std::numbers::pi);
    for (int k = l - m + 1; k <= l + m; ++k) norm /= k;
    norm = std::sqrt(norm);
    const double plm = p[static_cast<std::size_t>(l)];
    if (m == 0) {
      out[l] = norm * plm;
    } else {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      out[l + m] = sign * std::numbers::sqrt2 * norm * plm * std::cos(m * phi);
      out[l - m] = std::numbers::sqrt2 * norm * plm * std::sin(m * phi);
    }
  }
  return out;
}

}  // namespace oracle
