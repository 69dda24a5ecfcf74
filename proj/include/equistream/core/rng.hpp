#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace equistream {

using Rng = std::mt19937_64;

// Global seed fallback: EQUISTREAM_SEED if set, otherwise `fallback`.
inline std::uint64_t default_seed(std::uint64_t fallback = 0) {
  if (const char* env = std::getenv("EQUISTREAM_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env) return static_cast<std::uint64_t>(v);
  }
  return fallback;
}

inline double normal(Rng& rng, double mean = 0.0, double stddev = 1.0) {
  std::normal_distribution<double> dist(mean, stddev);
  return dist(rng);
}

inline double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

inline Eigen::Vector3d random_unit_vector(Rng& rng) {
  Eigen::Vector3d v;
  do {
    v = Eigen::Vector3d(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-8);
  return v.normalized();
}

inline Eigen::MatrixXd random_matrix(Rng& rng, Eigen::Index rows,
                                     Eigen::Index cols) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
  return m;
}

}  // namespace equistream
