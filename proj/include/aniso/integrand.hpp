#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aniso/direction.hpp"
#include "aniso/polynomial.hpp"
#include "aniso/types.hpp"

namespace aniso {

enum class IntegrandKind { isotropic, hexic2d, hexic2d_rotated, hexic3d, hexic3d_rotated, custom_polynomial };
enum class DerivativeMode { analytic, numeric };

std::string to_string(IntegrandKind kind);
IntegrandKind integrand_kind_from_string(const std::string& name);
std::string to_string(DerivativeMode mode);

/// Operator A = D^2 gamma + gamma * 1 on the tangent space at a direction,
/// expressed in an orthonormal tangent frame (1x1 for n = 1, 2x2 for n = 2).
struct SphereOperatorA {
  MatN value;
  double determinant = 0.0;
  double min_eigenvalue = 0.0;
};

/// Orthonormal tangent frame at `nu`, as columns. For n = 1 this is
/// (-sin t, cos t); for n = 2 it is (d nu/d theta, d nu/d rho / cos theta).
MatN tangent_frame(const Direction& nu);

/// Default step for the numeric first derivative.
inline constexpr double kDefaultGradientStep = 1e-6;
/// Geodesic step for the numeric second derivative.
inline constexpr double kHessianStep = 1e-4;

/// An anisotropic energy density gamma: S^n -> R_{>0}.
///
/// Every integrand is stored in the normal form
///
///   gamma_bar(x) = c * P(Q^T x) / |x|^(d-1) + <a, x>,
///
/// where P is a homogeneous polynomial of even degree d, Q is orthogonal, c > 0
/// and a is a constant vector. The builtin kinds are particular choices of P.
/// Values are immutable and safe to share across threads.
class Integrand {
 public:
  static Integrand isotropic(int n);
  /// cos^6 t + sin^6 t on S^1.
  static Integrand hexic2d();
  /// hexic2d rotated by pi/4: (x^6 + 15 x^4 y^2 + 15 x^2 y^4 + y^6) / 4.
  static Integrand hexic2d_rotated();
  /// (x^2 + y^2)^3 + z^6 on S^2.
  static Integrand hexic3d();
  /// Lift of hexic2d_rotated about the vertical axis.
  static Integrand hexic3d_rotated();
  static Integrand custom(int n, HomogeneousPolynomial polynomial);

  /// Positivity is validated on a direction grid of this many samples per
  /// angular unit (1024 for n = 1, 64 x 128 for n = 2 by default).
  static constexpr int kPositivityGrid1 = 1024;
  static constexpr int kPositivityRows2 = 64;

  int n() const { return n_; }
  IntegrandKind kind() const { return kind_; }
  DerivativeMode derivative_mode() const { return mode_; }
  double gradient_step() const { return h_; }
  const HomogeneousPolynomial& polynomial() const { return poly_; }
  double scale_factor() const { return scale_; }
  const MatN& rotation() const { return rotation_; }
  const VecN& linear_term() const { return linear_; }
  bool is_plain() const;  // identity rotation and no linear term

  Integrand with_derivative_mode(DerivativeMode mode, double h = kDefaultGradientStep) const;
  /// c * gamma.
  Integrand scaled(double c) const;
  /// gamma + <a, nu>. Throws if the result is not positive.
  Integrand plus_linear(const VecN& a) const;
  /// gamma'(nu) = gamma(Q^T nu) for an orthogonal Q.
  Integrand transformed(const MatN& q) const;
  /// n = 1: rotation of the plane by `angle`. n = 2: rotation about the x3 axis.
  Integrand rotated(double angle) const;

  /// gamma(nu). Throws DimensionMismatch when nu lives on another sphere.
  double evaluate(const Direction& nu) const;
  /// Homogeneous extension gamma_bar(x) = |x| gamma(x/|x|); zero at the origin.
  double homogeneous_extension(const VecN& x) const;
  /// Ambient gradient of gamma_bar at nu, i.e. the Cahn-Hoffman map xi(nu).
  VecN extension_gradient(const Direction& nu) const;
  /// Ambient gradient of gamma_bar at any x != 0.
  VecN extension_gradient_at(const VecN& x) const;
  /// Ambient Hessian of gamma_bar at x != 0 (analytic mode only).
  MatN extension_hessian_at(const VecN& x) const;
  SphereOperatorA operator_A(const Direction& nu) const;

  /// n = 1 only: the integrand on S^2 obtained by substituting
  /// x1^2 -> x1^2 + x2^2 in gamma_bar, the profile's second coordinate becoming
  /// x3. Requires gamma_bar to be even in x1.
  Integrand rotational_lift() const;
  /// n = 2 only: restriction to the (x1, x3) meridian plane. Requires gamma to
  /// be invariant under rotations about the x3 axis.
  Integrand meridian_profile() const;

 private:
  Integrand(int n, IntegrandKind kind, HomogeneousPolynomial poly);
  void validate_positive() const;
  void check_dimension(int vector_size) const;
  VecN numeric_gradient(const VecN& x) const;
  MatN numeric_tangent_hessian(const Direction& nu) const;

  int n_ = 1;
  IntegrandKind kind_ = IntegrandKind::isotropic;
  DerivativeMode mode_ = DerivativeMode::analytic;
  double h_ = kDefaultGradientStep;
  HomogeneousPolynomial poly_;
  double scale_ = 1.0;
  MatN rotation_;
  VecN linear_;
};

/// Parsed form of an integrand spec file.
struct IntegrandSpec {
  int n = 1;
  IntegrandKind kind = IntegrandKind::isotropic;
  std::vector<Monomial> coefficients;
  DerivativeMode derivative_mode = DerivativeMode::analytic;
  double h = kDefaultGradientStep;
};

Integrand make_integrand(const IntegrandSpec& spec);

struct ConvexityReport {
  bool is_convex = false;
  double min_eigenvalue = 0.0;
  Direction witness = Direction::from_angle(0.0);
  // Midpoint test on random pairs of the homogeneous extension.
  bool midpoint_convex = false;
  long long midpoint_pairs = 0;
  long long midpoint_violations = 0;
  double worst_midpoint_excess = 0.0;
  VecN midpoint_witness_x;
  VecN midpoint_witness_y;
};

inline constexpr double kTolConvex = 1e-9;

/// Minimum eigenvalue of A over a direction grid plus a randomized midpoint
/// convexity check of gamma_bar. Throws NumericalError when the two verdicts
/// disagree. `grid_resolution` >= 64.
ConvexityReport convexity_report(const Integrand& gamma, int grid_resolution, long long midpoint_pairs = 10000,
                                 unsigned long long seed = 20180327ULL);

}  // namespace aniso
