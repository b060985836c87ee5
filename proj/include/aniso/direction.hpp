#pragma once

#include <algorithm>
#include <cmath>

#include "aniso/errors.hpp"
#include "aniso/types.hpp"

namespace aniso {

/// A unit vector on S^n, n in {1, 2}.
///
/// For n = 1 the chart is nu = (cos t, sin t). For n = 2 it is
/// nu = (cos t cos r, cos t sin r, sin t) with latitude t in [-pi/2, pi/2] and
/// azimuth r in [0, 2*pi).
class Direction {
 public:
  static Direction from_angle(double theta) {
    VecN v(2);
    v << std::cos(theta), std::sin(theta);
    return Direction(v);
  }

  static Direction from_angles(double theta, double rho) {
    VecN v(3);
    v << std::cos(theta) * std::cos(rho), std::cos(theta) * std::sin(rho), std::sin(theta);
    return Direction(v);
  }

  /// Normalizes `v`; throws on a zero or wrongly-sized vector.
  static Direction from_vector(const VecN& v) {
    if (v.size() != 2 && v.size() != 3) throw ValidationError("direction must have 2 or 3 components");
    const double len = v.norm();
    if (!(len > 0.0) || !std::isfinite(len)) throw ValidationError("direction vector has zero length");
    return Direction(v / len);
  }

  int n() const { return static_cast<int>(components_.size()) - 1; }
  const VecN& components() const { return components_; }
  double operator[](int i) const { return components_[i]; }

  /// n = 1: polar angle in [0, 2*pi). n = 2: latitude in [-pi/2, pi/2].
  double theta() const {
    if (n() == 1) return wrap_angle(std::atan2(components_[1], components_[0]));
    return std::asin(std::clamp(components_[2], -1.0, 1.0));
  }

  /// n = 2 only: azimuth in [0, 2*pi).
  double rho() const {
    if (n() != 2) throw DimensionMismatch(2, n());
    return wrap_angle(std::atan2(components_[1], components_[0]));
  }

  Direction operator-() const { return Direction(-components_); }

 private:
  explicit Direction(VecN v) : components_(std::move(v)) {}
  VecN components_;
};

}  // namespace aniso
