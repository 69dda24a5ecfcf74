#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "equistream/core/rng.hpp"
#include "equistream/so3/harmonics.hpp"
#include "equistream/so3/wigner.hpp"

namespace equistream::so3 {

struct IrrepsEntry {
  int degree = 0;
  int channels = 1;
};

// Ordered direct sum of degree-l blocks, each channels x (2l+1).
class IrrepsSpec {
 public:
  static constexpr int kDefaultMaxDegree = 4;

  IrrepsSpec() = default;

  IrrepsSpec(std::initializer_list<IrrepsEntry> entries,
             int max_degree = kDefaultMaxDegree)
      : IrrepsSpec(std::vector<IrrepsEntry>(entries), max_degree) {}

  explicit IrrepsSpec(std::vector<IrrepsEntry> entries,
                      int max_degree = kDefaultMaxDegree)
      : entries_(std::move(entries)) {
    int prev = -1;
    for (const auto& e : entries_) {
      if (e.degree <= prev)
        throw std::invalid_argument("IrrepsSpec: degrees must be strictly increasing");
      if (e.degree > max_degree)
        throw std::invalid_argument("IrrepsSpec: degree exceeds configured maximum");
      if (e.channels < 1)
        throw std::invalid_argument("IrrepsSpec: channels must be positive");
      check_degree(e.degree);
      prev = e.degree;
    }
  }

  const std::vector<IrrepsEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  int scalar_dim() const {
    int d = 0;
    for (const auto& e : entries_) d += e.channels * (2 * e.degree + 1);
    return d;
  }

  bool operator==(const IrrepsSpec& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].degree != other.entries_[i].degree ||
          entries_[i].channels != other.entries_[i].channels)
        return false;
    return true;
  }

 private:
  std::vector<IrrepsEntry> entries_;
};

struct IrrepsFeature {
  IrrepsSpec spec;
  std::vector<Eigen::MatrixXd> blocks;  // per entry, channels x (2l+1)

  static IrrepsFeature zeros(const IrrepsSpec& spec) {
    IrrepsFeature f{spec, {}};
    for (const auto& e : spec.entries())
      f.blocks.emplace_back(
          Eigen::MatrixXd::Zero(e.channels, 2 * e.degree + 1));
    return f;
  }

  static IrrepsFeature random(const IrrepsSpec& spec, Rng& rng) {
    IrrepsFeature f{spec, {}};
    for (const auto& e : spec.entries())
      f.blocks.push_back(random_matrix(rng, e.channels, 2 * e.degree + 1));
    return f;
  }

  void validate() const {
    if (blocks.size() != spec.size())
      throw std::invalid_argument("IrrepsFeature: block count mismatch");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto& e = spec.entries()[i];
      if (blocks[i].rows() != e.channels ||
          blocks[i].cols() != 2 * e.degree + 1)
        throw std::invalid_argument("IrrepsFeature: block shape mismatch");
      if (!blocks[i].allFinite())
        throw std::invalid_argument("IrrepsFeature: non-finite entries");
    }
  }
};

// Each block row is a harmonic-type value vector v -> D v, so blocks are
// right-multiplied by D^T.
inline IrrepsFeature rotate_feature(const IrrepsFeature& h, const Rotation& r) {
  IrrepsFeature out{h.spec, {}};
  out.blocks.reserve(h.blocks.size());
  for (std::size_t i = 0; i < h.blocks.size(); ++i) {
    const auto d = wigner_d(h.spec.entries()[i].degree, r);
    out.blocks.push_back(h.blocks[i] * d.matrix.transpose());
  }
  return out;
}

}  // namespace equistream::so3
