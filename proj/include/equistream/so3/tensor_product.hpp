#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>

#include "equistream/core/counters.hpp"
#include "equistream/so3/clebsch.hpp"

namespace equistream::so3 {

// Dense Clebsch-Gordan product of two degree blocks: the full double sum
// over (m1, m2). This is the correctness oracle for every sparse path, so
// it stays deliberately literal. Channels pair element-wise; a one-channel
// block broadcasts against the other leg. Returns nullopt when the path
// violates the triangle rule.
inline std::optional<Eigen::MatrixXd> tensor_product_dense(
    const Eigen::MatrixXd& u, int l1, const Eigen::MatrixXd& v, int l2,
    int l_out) {
  if (u.cols() != 2 * l1 + 1 || v.cols() != 2 * l2 + 1)
    throw std::invalid_argument("tensor_product_dense: block width mismatch");
  if (!triangle_valid(l1, l2, l_out)) return std::nullopt;
  const Eigen::Index cu = u.rows(), cv = v.rows();
  if (cu != cv && cu != 1 && cv != 1)
    throw std::invalid_argument(
        "tensor_product_dense: channel counts must match or broadcast");
  const Eigen::Index channels = std::max(cu, cv);

  const CGTable& table = cg_real(l1, l2, l_out);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(channels, 2 * l_out + 1);
  for (int mo = -l_out; mo <= l_out; ++mo) {
    const Eigen::MatrixXd& slab = table.coeffs[static_cast<std::size_t>(mo + l_out)];
    for (Eigen::Index c = 0; c < channels; ++c) {
      const Eigen::Index c1 = (cu == 1) ? 0 : c;
      const Eigen::Index c2 = (cv == 1) ? 0 : c;
      double acc = 0.0;
      for (int m1 = -l1; m1 <= l1; ++m1)
        for (int m2 = -l2; m2 <= l2; ++m2)
          acc += slab(m1 + l1, m2 + l2) * u(c1, m1 + l1) * v(c2, m2 + l2);
      out(c, mo + l_out) = acc;
    }
  }
  counters().add_madds(static_cast<std::uint64_t>(channels) *
                       static_cast<std::uint64_t>(2 * l1 + 1) *
                       static_cast<std::uint64_t>(2 * l2 + 1) *
                       static_cast<std::uint64_t>(2 * l_out + 1));
  return out;
}

}  // namespace equistream::so3
