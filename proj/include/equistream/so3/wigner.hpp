#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "equistream/so3/clebsch.hpp"
#include "equistream/so3/harmonics.hpp"
#include "equistream/so3/rotation.hpp"

namespace equistream::so3 {

// Real-basis representation matrix of degree l. Convention anchor:
//   solid_harmonics(l, R r) = wigner_d(l, R).matrix * solid_harmonics(l, r).
struct WignerD {
  int degree = 0;
  Eigen::MatrixXd matrix;
};

namespace detail {

// Real-basis rotation generators G_x, G_y, G_z for degree l: the harmonic
// value vector obeys d/dt solid(l, R_a(t) r) = G_a solid(l, r) at t = 0.
// Built from the ladder operators conjugated into the real basis.
inline std::array<Eigen::MatrixXd, 3> build_generators(int l) {
  const int dim = 2 * l + 1;
  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(dim, dim);  // J_+
  Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = -l; m <= l; ++m) {
    jz(m + l, m + l) = static_cast<double>(m);
    if (m < l)
      jp(m + 1 + l, m + l) =
          std::sqrt(static_cast<double>(l * (l + 1) - m * (m + 1)));
  }
  const Eigen::MatrixXcd jm = jp.adjoint();
  const std::complex<double> i_unit(0.0, 1.0);
  const Eigen::MatrixXcd jx = 0.5 * (jp + jm);
  const Eigen::MatrixXcd jy = -0.5 * i_unit * (jp - jm);

  const Eigen::MatrixXcd u = real_basis_change(l);
  std::array<Eigen::MatrixXd, 3> out;
  const std::array<const Eigen::MatrixXcd*, 3> js = {&jx, &jy, &jz};
  for (int a = 0; a < 3; ++a) {
    const Eigen::MatrixXcd g = u * (i_unit * (*js[a])) * u.adjoint();
    if (g.imag().cwiseAbs().maxCoeff() > 1e-12)
      throw std::runtime_error("wigner generators: imaginary residue");
    out[static_cast<std::size_t>(a)] = g.real();
  }
  return out;
}

inline const std::array<Eigen::MatrixXd, 3>& generators(int l) {
  check_degree(l);
  static std::map<int, std::array<Eigen::MatrixXd, 3>> cache;
  static std::mutex mutex;
  std::scoped_lock lock(mutex);
  auto it = cache.find(l);
  if (it == cache.end()) it = cache.emplace(l, build_generators(l)).first;
  return it->second;
}

}  // namespace detail

inline WignerD wigner_d(int l, const Rotation& rot) {
  check_degree(l);
  if (l == 0) return {0, Eigen::MatrixXd::Ones(1, 1)};
  const auto [axis, angle] = rot.axis_angle();
  const auto& gen = detail::generators(l);
  const Eigen::MatrixXd k =
      angle * (axis.x() * gen[0] + axis.y() * gen[1] + axis.z() * gen[2]);
  return {l, k.exp()};
}

}  // namespace equistream::so3
