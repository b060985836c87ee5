#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace aniso {

// Ambient vectors live in R^{n+1} with n in {1, 2}; the fixed maximum size keeps
// them on the stack.
using VecN = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;
using MatN = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 3, 3>;

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduce an angle to [0, 2*pi).
inline double wrap_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

}  // namespace aniso
