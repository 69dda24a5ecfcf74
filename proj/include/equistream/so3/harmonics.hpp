#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "equistream/core/factorials.hpp"

namespace equistream::so3 {

// Hard cap on the spherical-harmonic degree the coefficient tables cover.
// IrrepsSpec applies the user-facing default of 4 on top of this.
inline constexpr int kMaxDegree = 8;

inline constexpr double kY00 = 0.28209479177387814;  // 1 / (2 sqrt(pi))

inline void check_degree(int l) {
  if (l < 0) throw std::invalid_argument("harmonics: negative degree");
  if (l > kMaxDegree)
    throw std::invalid_argument("harmonics: unsupported degree (> max)");
}

// Real solid harmonics ||r||^l Y_{l,m}(r/||r||), m = -l..l ascending.
//
// Convention: orthonormal real harmonics (integral of Y^2 over the sphere
// is 1), obtained from the Condon-Shortley complex harmonics by the fixed
// change of basis
//   x_m = (i/sqrt2)(z_m - (-1)^m z_{-m})   m < 0
//   x_0 = z_0
//   x_m = (1/sqrt2)(z_m + (-1)^m z_{-m})   m > 0
// which leaves an extra (-1)^m on the positive-m tesseral components.
// Evaluated as homogeneous polynomials in (x, y, z): finite everywhere,
// zero at the origin for l >= 1.
inline Eigen::VectorXd solid_harmonics(int l, const Eigen::Vector3d& r) {
  check_degree(l);
  if (!r.allFinite())
    throw std::invalid_argument("solid_harmonics: non-finite input");

  const double x = r.x(), y = r.y(), z = r.z();
  const double r2 = x * x + y * y + z * z;

  Eigen::VectorXd out(2 * l + 1);
  if (l == 0) {
    out[0] = kY00;
    return out;
  }

  // pi_prev2/pi_prev1 walk l upward at fixed mu; see Helgaker et al. for the
  // associated-Legendre recurrence lifted to polynomials in (z, r^2).
  double a_mu = 1.0, b_mu = 0.0;  // Re/Im of (x + i y)^mu
  for (int mu = 0; mu <= l; ++mu) {
    if (mu > 0) {
      const double a_new = a_mu * x - b_mu * y;
      const double b_new = a_mu * y + b_mu * x;
      a_mu = a_new;
      b_mu = b_new;
    }
    double pi_prev2 = 0.0;
    double pi_cur = double_factorial_odd(mu);  // Pi_mu^mu
    for (int ll = mu + 1; ll <= l; ++ll) {
      const double pi_next =
          ((2 * ll - 1) * z * pi_cur - (ll + mu - 1) * r2 * pi_prev2) /
          static_cast<double>(ll - mu);
      pi_prev2 = pi_cur;
      pi_cur = pi_next;
    }
    const double norm = std::sqrt(
        (2 * l + 1) / (4.0 * std::numbers::pi) *
        static_cast<double>(factorial(l - mu) / factorial(l + mu)));
    if (mu == 0) {
      out[l] = norm * pi_cur;
    } else {
      const double scale = std::numbers::sqrt2 * norm * pi_cur;
      out[l + mu] = parity_sign(mu) * scale * a_mu;
      out[l - mu] = scale * b_mu;
    }
  }
  return out;
}

// Y_{l,m}(u) for unit u.
inline Eigen::VectorXd real_spherical_harmonics(int l,
                                                const Eigen::Vector3d& u) {
  check_degree(l);
  if (std::abs(u.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("real_spherical_harmonics: input not unit");
  return solid_harmonics(l, u);
}

// ||r||^l Y_{l,0}(e_z): the only surviving magnitude after axis alignment.
inline double on_axis_solid_harmonic(int l, double r_norm) {
  check_degree(l);
  return std::pow(r_norm, l) *
         std::sqrt((2 * l + 1) / (4.0 * std::numbers::pi));
}

}  // namespace equistream::so3
