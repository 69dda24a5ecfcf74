#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "equistream/core/factorials.hpp"
#include "equistream/so3/harmonics.hpp"

namespace equistream::so3 {

inline bool triangle_valid(int l1, int l2, int l_out) {
  return l_out >= std::abs(l1 - l2) && l_out <= l1 + l2;
}

// <j1 m1; j2 m2 | J M> in the complex (Condon-Shortley) basis, integer
// angular momenta only. Racah closed form; see Brink & Satchler,
// "Angular Momentum".
inline double complex_cg(int j1, int m1, int j2, int m2, int J, int M) {
  if (j1 < 0 || j2 < 0 || J < 0)
    throw std::invalid_argument("complex_cg: negative angular momentum");
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J) return 0.0;
  if (M != m1 + m2) return 0.0;
  if (!triangle_valid(j1, j2, J)) return 0.0;

  const long double delta =
      factorial(j1 + j2 - J) * factorial(j1 - j2 + J) *
      factorial(-j1 + j2 + J) / factorial(j1 + j2 + J + 1);
  const long double prefactor =
      std::sqrt(static_cast<long double>(2 * J + 1) * delta *
                factorial(J + M) * factorial(J - M) * factorial(j1 + m1) *
                factorial(j1 - m1) * factorial(j2 + m2) * factorial(j2 - m2));

  const int k_min = std::max({0, j2 - J - m1, j1 - J + m2});
  const int k_max = std::min({j1 + j2 - J, j1 - m1, j2 + m2});
  long double sum = 0.0L;
  for (int k = k_min; k <= k_max; ++k) {
    const long double term =
        factorial(k) * factorial(j1 + j2 - J - k) * factorial(j1 - m1 - k) *
        factorial(j2 + m2 - k) * factorial(J - j2 + m1 + k) *
        factorial(J - j1 - m2 + k);
    sum += parity_sign(k) / term;
  }
  return static_cast<double>(prefactor * sum);
}

// Wigner 6j symbol {j1 j2 j3; j4 j5 j6}, integer arguments, Racah formula.
// Returns 0 whenever any triad violates the triangle rule.
inline double wigner_6j(int j1, int j2, int j3, int j4, int j5, int j6) {
  const auto triad_ok = [](int a, int b, int c) {
    return a >= 0 && b >= 0 && c >= 0 && triangle_valid(a, b, c);
  };
  if (!triad_ok(j1, j2, j3) || !triad_ok(j1, j5, j6) ||
      !triad_ok(j4, j2, j6) || !triad_ok(j4, j5, j3))
    return 0.0;

  const auto tri = [](int a, int b, int c) {
    return factorial(a + b - c) * factorial(a - b + c) *
           factorial(-a + b + c) / factorial(a + b + c + 1);
  };
  const long double prefactor = std::sqrt(
      tri(j1, j2, j3) * tri(j1, j5, j6) * tri(j4, j2, j6) * tri(j4, j5, j3));

  const int t_min = std::max({j1 + j2 + j3, j1 + j5 + j6, j4 + j2 + j6,
                              j4 + j5 + j3});
  const int t_max = std::min({j1 + j2 + j4 + j5, j2 + j3 + j5 + j6,
                              j3 + j1 + j6 + j4});
  long double sum = 0.0L;
  for (int t = t_min; t <= t_max; ++t) {
    const long double denom =
        factorial(t - j1 - j2 - j3) * factorial(t - j1 - j5 - j6) *
        factorial(t - j4 - j2 - j6) * factorial(t - j4 - j5 - j3) *
        factorial(j1 + j2 + j4 + j5 - t) * factorial(j2 + j3 + j5 + j6 - t) *
        factorial(j3 + j1 + j6 + j4 - t);
    sum += parity_sign(t) * factorial(t + 1) / denom;
  }
  return static_cast<double>(prefactor * sum);
}

// Complex -> real change of basis within degree l; row m, column mu. Same
// matrix that defines the harmonics convention in harmonics.hpp.
inline Eigen::MatrixXcd real_basis_change(int l) {
  check_degree(l);
  const int dim = 2 * l + 1;
  const std::complex<double> i_unit(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  u(l, l) = 1.0;
  for (int m = 1; m <= l; ++m) {
    u(l + m, l + m) = inv_sqrt2;
    u(l + m, l - m) = parity_sign(m) * inv_sqrt2;
    u(l - m, l - m) = i_unit * inv_sqrt2;
    u(l - m, l + m) = -i_unit * (parity_sign(m) * inv_sqrt2);
  }
  return u;
}

// One Clebsch-Gordan coupling path in the real basis. coeffs(m1, m2)
// indexed by m_out; all indices stored as m + l offsets.
struct CGTable {
  int l1 = 0, l2 = 0, l_out = 0;
  // coeffs[m_out + l_out](m1 + l1, m2 + l2)
  std::vector<Eigen::MatrixXd> coeffs;

  bool empty() const { return coeffs.empty(); }
  double coeff(int m1, int m2, int m_out) const {
    return coeffs[static_cast<std::size_t>(m_out + l_out)](m1 + l1, m2 + l2);
  }
};

namespace detail {

inline CGTable build_cg_real(int l1, int l2, int l_out) {
  CGTable table{l1, l2, l_out, {}};
  if (!triangle_valid(l1, l2, l_out)) return table;

  const Eigen::MatrixXcd u1 = real_basis_change(l1);
  const Eigen::MatrixXcd u2 = real_basis_change(l2);
  const Eigen::MatrixXcd uo = real_basis_change(l_out);

  // Conjugate the complex tensor on all three legs. Odd l1+l2+l_out paths
  // come out purely imaginary; the fixed phase -i makes them real while
  // keeping even paths untouched (recorded in the conventions manifest).
  const bool odd = ((l1 + l2 + l_out) % 2) != 0;
  const std::complex<double> phase = odd ? std::complex<double>(0.0, -1.0)
                                         : std::complex<double>(1.0, 0.0);

  const int d1 = 2 * l1 + 1, d2 = 2 * l2 + 1, dout = 2 * l_out + 1;
  table.coeffs.assign(static_cast<std::size_t>(dout),
                      Eigen::MatrixXd::Zero(d1, d2));
  for (int mo = -l_out; mo <= l_out; ++mo) {
    Eigen::MatrixXd& slab = table.coeffs[static_cast<std::size_t>(mo + l_out)];
    for (int m1 = -l1; m1 <= l1; ++m1) {
      for (int m2 = -l2; m2 <= l2; ++m2) {
        std::complex<double> acc(0.0, 0.0);
        // The complex tensor is sparse (M = mu1 + mu2) and each real index
        // mixes at most {m, -m}; restrict the sums accordingly.
        const int mu1s[2] = {m1, -m1};
        const int mu2s[2] = {m2, -m2};
        const int mus[2] = {mo, -mo};
        for (int a = 0; a < (m1 == 0 ? 1 : 2); ++a) {
          for (int b = 0; b < (m2 == 0 ? 1 : 2); ++b) {
            const int mu1 = mu1s[a], mu2 = mu2s[b];
            for (int c = 0; c < (mo == 0 ? 1 : 2); ++c) {
              const int muo = mus[c];
              if (muo != mu1 + mu2) continue;
              const std::complex<double> w =
                  uo(mo + l_out, muo + l_out) *
                  std::conj(u1(m1 + l1, mu1 + l1)) *
                  std::conj(u2(m2 + l2, mu2 + l2));
              if (w == std::complex<double>(0.0, 0.0)) continue;
              acc += w * complex_cg(l1, mu1, l2, mu2, l_out, muo);
            }
          }
        }
        acc *= phase;
        if (std::abs(acc.imag()) > 1e-12)
          throw std::runtime_error(
              "cg_real: imaginary residue above tolerance (basis "
              "convention inconsistency)");
        slab(m1 + l1, m2 + l2) = acc.real();
      }
    }
  }
  return table;
}

}  // namespace detail

// Real-basis CG table for one (l1, l2 -> l_out) path. Tables are built once
// and cached; the cache is guarded so concurrent first access is safe.
inline const CGTable& cg_real(int l1, int l2, int l_out) {
  check_degree(l1);
  check_degree(l2);
  check_degree(l_out);
  static std::map<std::tuple<int, int, int>, CGTable> cache;
  static std::mutex mutex;
  std::scoped_lock lock(mutex);
  const auto key = std::make_tuple(l1, l2, l_out);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, detail::build_cg_real(l1, l2, l_out)).first;
  return it->second;
}

}  // namespace equistream::so3
