#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "equistream/core/rng.hpp"

namespace equistream::so3 {

// Proper rotation, stored as the 3x3 matrix. Construction validates
// orthogonality and det = +1.
class Rotation {
 public:
  Rotation() : m_(Eigen::Matrix3d::Identity()) {}

  explicit Rotation(const Eigen::Matrix3d& m) : m_(m) {
    if ((m.transpose() * m - Eigen::Matrix3d::Identity()).norm() > 1e-12 * 3 ||
        std::abs(m.determinant() - 1.0) > 1e-12)
      throw std::invalid_argument("Rotation: matrix not in SO(3)");
  }

  static Rotation identity() { return Rotation(); }

  static Rotation from_axis_angle(const Eigen::Vector3d& axis, double angle) {
    const double n = axis.norm();
    if (n < 1e-14)
      throw std::invalid_argument("Rotation: zero axis");
    return Rotation(Eigen::AngleAxisd(angle, axis / n).toRotationMatrix());
  }

  // Haar-uniform via quaternion draw.
  static Rotation random(Rng& rng) {
    Eigen::Vector4d q;
    do {
      q = Eigen::Vector4d(normal(rng), normal(rng), normal(rng), normal(rng));
    } while (q.norm() < 1e-8);
    q.normalize();
    return Rotation(
        Eigen::Quaterniond(q[0], q[1], q[2], q[3]).toRotationMatrix());
  }

  const Eigen::Matrix3d& matrix() const { return m_; }
  Rotation inverse() const {
    Rotation r;
    r.m_ = m_.transpose();
    return r;
  }
  Rotation operator*(const Rotation& other) const {
    Rotation r;
    r.m_ = m_ * other.m_;
    return r;
  }
  Eigen::Vector3d operator*(const Eigen::Vector3d& v) const { return m_ * v; }

  // (axis, angle) with angle in [0, pi]. At angle == pi the axis sign is
  // arbitrary; integer-degree representations are insensitive to it.
  std::pair<Eigen::Vector3d, double> axis_angle() const {
    const Eigen::AngleAxisd aa(m_);
    double angle = aa.angle();
    Eigen::Vector3d axis = aa.axis();
    if (angle < 0) {
      angle = -angle;
      axis = -axis;
    }
    return {axis, angle};
  }

 private:
  Eigen::Matrix3d m_;
};

}  // namespace equistream::so3
