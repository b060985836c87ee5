#include "aniso/integrand.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "aniso/errors.hpp"

namespace aniso {

namespace {

HomogeneousPolynomial sum_of_squares(int variables) {
  std::vector<Monomial> t;
  for (int i = 0; i < variables; ++i) {
    Monomial m{1.0, {0, 0, 0}};
    m.exponents[i] = 2;
    t.push_back(m);
  }
  return HomogeneousPolynomial(variables, std::move(t));
}

std::string format_vector(const VecN& v) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (int i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

std::string to_string(IntegrandKind kind) {
  switch (kind) {
    case IntegrandKind::isotropic: return "isotropic";
    case IntegrandKind::hexic2d: return "hexic2d";
    case IntegrandKind::hexic2d_rotated: return "hexic2d-rotated";
    case IntegrandKind::hexic3d: return "hexic3d";
    case IntegrandKind::hexic3d_rotated: return "hexic3d-rotated";
    case IntegrandKind::custom_polynomial: return "custom-polynomial";
  }
  return "unknown";
}

IntegrandKind integrand_kind_from_string(const std::string& name) {
  for (auto k : {IntegrandKind::isotropic, IntegrandKind::hexic2d, IntegrandKind::hexic2d_rotated,
                 IntegrandKind::hexic3d, IntegrandKind::hexic3d_rotated, IntegrandKind::custom_polynomial})
    if (to_string(k) == name) return k;
  throw ValidationError("unknown integrand kind '" + name + "'");
}

std::string to_string(DerivativeMode mode) { return mode == DerivativeMode::analytic ? "analytic" : "numeric"; }

MatN tangent_frame(const Direction& nu) {
  const VecN& v = nu.components();
  if (nu.n() == 1) {
    MatN e(2, 1);
    e << -v[1], v[0];
    return e;
  }
  const double theta = nu.theta();
  const double rho = std::atan2(v[1], v[0]);
  MatN e(3, 2);
  e << -std::sin(theta) * std::cos(rho), -std::sin(rho),  //
      -std::sin(theta) * std::sin(rho), std::cos(rho),    //
      std::cos(theta), 0.0;
  return e;
}

Integrand::Integrand(int n, IntegrandKind kind, HomogeneousPolynomial poly)
    : n_(n), kind_(kind), poly_(std::move(poly)) {
  if (n_ != 1 && n_ != 2) throw ValidationError("integrand dimension must be 1 or 2");
  if (poly_.variables() != n_ + 1) throw DimensionMismatch(n_, poly_.variables() - 1);
  if (poly_.degree() % 2 != 0 || poly_.degree() == 0)
    throw ValidationError("integrand polynomial must have positive even degree");
  rotation_ = MatN::Identity(n_ + 1, n_ + 1);
  linear_ = VecN::Zero(n_ + 1);
  validate_positive();
}

Integrand Integrand::isotropic(int n) { return Integrand(n, IntegrandKind::isotropic, sum_of_squares(n + 1)); }

Integrand Integrand::hexic2d() {
  return Integrand(1, IntegrandKind::hexic2d, HomogeneousPolynomial(2, {{1.0, {6, 0, 0}}, {1.0, {0, 6, 0}}}));
}

Integrand Integrand::hexic2d_rotated() {
  return Integrand(1, IntegrandKind::hexic2d_rotated,
                   HomogeneousPolynomial(2, {{0.25, {6, 0, 0}},
                                             {3.75, {4, 2, 0}},
                                             {3.75, {2, 4, 0}},
                                             {0.25, {0, 6, 0}}}));
}

Integrand Integrand::hexic3d() {
  Integrand g(2, IntegrandKind::hexic3d, hexic2d().polynomial().lift_about_vertical_axis());
  return g;
}

Integrand Integrand::hexic3d_rotated() {
  return Integrand(2, IntegrandKind::hexic3d_rotated, hexic2d_rotated().polynomial().lift_about_vertical_axis());
}

Integrand Integrand::custom(int n, HomogeneousPolynomial polynomial) {
  return Integrand(n, IntegrandKind::custom_polynomial, std::move(polynomial));
}

bool Integrand::is_plain() const {
  return rotation_ == MatN::Identity(n_ + 1, n_ + 1) && linear_.isZero(0.0);
}

Integrand Integrand::with_derivative_mode(DerivativeMode mode, double h) const {
  if (!(h > 0.0)) throw ValidationError("numeric derivative step must be positive");
  Integrand g = *this;
  g.mode_ = mode;
  g.h_ = h;
  return g;
}

Integrand Integrand::scaled(double c) const {
  if (!(c > 0.0)) throw ValidationError("integrand scale factor must be positive");
  Integrand g = *this;
  g.scale_ *= c;
  g.linear_ *= c;
  return g;
}

Integrand Integrand::plus_linear(const VecN& a) const {
  check_dimension(static_cast<int>(a.size()));
  Integrand g = *this;
  g.linear_ += a;
  g.kind_ = IntegrandKind::custom_polynomial;
  g.validate_positive();
  return g;
}

Integrand Integrand::transformed(const MatN& q) const {
  check_dimension(static_cast<int>(q.rows()));
  if (!(q.transpose() * q).isApprox(MatN::Identity(q.rows(), q.cols()), 1e-12))
    throw ValidationError("transformation is not orthogonal");
  Integrand g = *this;
  g.rotation_ = q * rotation_;
  g.linear_ = q * linear_;
  g.kind_ = IntegrandKind::custom_polynomial;
  return g;
}

Integrand Integrand::rotated(double angle) const {
  MatN q = MatN::Identity(n_ + 1, n_ + 1);
  const double c = std::cos(angle), s = std::sin(angle);
  q(0, 0) = c;
  q(0, 1) = -s;
  q(1, 0) = s;
  q(1, 1) = c;
  return transformed(q);
}

void Integrand::check_dimension(int vector_size) const {
  if (vector_size != n_ + 1) throw DimensionMismatch(n_, vector_size - 1);
}

void Integrand::validate_positive() const {
  auto check = [&](const Direction& nu) {
    const double g = evaluate(nu);
    if (!(g > 0.0))
      throw ValidationError("integrand is not positive at direction " + format_vector(nu.components()) +
                            " (gamma = " + std::to_string(g) + ")");
  };
  if (n_ == 1) {
    for (int k = 0; k < kPositivityGrid1; ++k) check(Direction::from_angle(kTwoPi * k / kPositivityGrid1));
  } else {
    const int rows = kPositivityRows2, cols = 2 * kPositivityRows2;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        check(Direction::from_angles(-kPi / 2 + kPi * i / (rows - 1), kTwoPi * j / cols));
  }
}

double Integrand::homogeneous_extension(const VecN& x) const {
  check_dimension(static_cast<int>(x.size()));
  const double r = x.norm();
  if (r == 0.0) return 0.0;
  const VecN y = rotation_.transpose() * x;
  const int k = poly_.degree() - 1;
  return scale_ * poly_.value(y) / std::pow(r, k) + linear_.dot(x);
}

double Integrand::evaluate(const Direction& nu) const {
  check_dimension(static_cast<int>(nu.components().size()));
  return homogeneous_extension(nu.components());
}

VecN Integrand::numeric_gradient(const VecN& x) const {
  const double step = h_ * std::max(1.0, x.norm());
  VecN g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    VecN xp = x, xm = x;
    xp[i] += step;
    xm[i] -= step;
    g[i] = (homogeneous_extension(xp) - homogeneous_extension(xm)) / (2.0 * step);
  }
  return g;
}

VecN Integrand::extension_gradient_at(const VecN& x) const {
  check_dimension(static_cast<int>(x.size()));
  if (mode_ == DerivativeMode::numeric) return numeric_gradient(x);
  const VecN y = rotation_.transpose() * x;
  const double r2 = y.squaredNorm();
  const double r = std::sqrt(r2);
  const int k = poly_.degree() - 1;
  const double rk = std::pow(r, k);
  const VecN g = poly_.gradient(y) / rk - k * poly_.value(y) * y / (rk * r2);
  return scale_ * (rotation_ * g) + linear_;
}

VecN Integrand::extension_gradient(const Direction& nu) const { return extension_gradient_at(nu.components()); }

MatN Integrand::extension_hessian_at(const VecN& x) const {
  check_dimension(static_cast<int>(x.size()));
  const VecN y = rotation_.transpose() * x;
  const double r2 = y.squaredNorm();
  const double r = std::sqrt(r2);
  const int k = poly_.degree() - 1;
  const double rk = std::pow(r, k);
  const double p = poly_.value(y);
  const VecN dp = poly_.gradient(y);
  const MatN hp = poly_.hessian(y);
  const int m = static_cast<int>(y.size());
  MatN h = hp / rk - (k / (rk * r2)) * (dp * y.transpose() + y * dp.transpose()) -
           (k * p / (rk * r2)) * MatN::Identity(m, m) + (k * (k + 2) * p / (rk * r2 * r2)) * (y * y.transpose());
  return scale_ * (rotation_ * h * rotation_.transpose());
}

MatN Integrand::numeric_tangent_hessian(const Direction& nu) const {
  const MatN e = tangent_frame(nu);
  const VecN& v = nu.components();
  const double g0 = homogeneous_extension(v);
  const double s = kHessianStep;
  // Second derivative of gamma along the great circle through nu with initial
  // velocity w.
  auto second = [&](const VecN& w) {
    const double len = w.norm();
    const VecN u = w / len;
    const VecN p = std::cos(s * len) * v + std::sin(s * len) * u;
    const VecN q = std::cos(s * len) * v - std::sin(s * len) * u;
    return (homogeneous_extension(p) - 2.0 * g0 + homogeneous_extension(q)) / (s * s);
  };
  const int n = static_cast<int>(e.cols());
  MatN d2(n, n);
  for (int i = 0; i < n; ++i) {
    d2(i, i) = second(e.col(i));
    for (int j = i + 1; j < n; ++j) {
      const double mixed = (second(e.col(i) + e.col(j)) - second(e.col(i) - e.col(j))) / 4.0;
      d2(i, j) = d2(j, i) = mixed;
    }
  }
  return d2;
}

SphereOperatorA Integrand::operator_A(const Direction& nu) const {
  check_dimension(static_cast<int>(nu.components().size()));
  SphereOperatorA a;
  if (mode_ == DerivativeMode::analytic) {
    // On the sphere, the ambient Hessian of the degree-one extension restricted
    // to the tangent space equals D^2 gamma + gamma * 1.
    const MatN e = tangent_frame(nu);
    a.value = e.transpose() * extension_hessian_at(nu.components()) * e;
    a.value = 0.5 * (a.value + a.value.transpose()).eval();
  } else {
    const int n = n_;
    a.value = numeric_tangent_hessian(nu) + evaluate(nu) * MatN::Identity(n, n);
  }
  if (a.value.rows() == 1) {
    a.determinant = a.value(0, 0);
    a.min_eigenvalue = a.value(0, 0);
  } else {
    const double p = a.value(0, 0), q = a.value(1, 1), r = a.value(0, 1);
    a.determinant = p * q - r * r;
    a.min_eigenvalue = 0.5 * (p + q) - std::sqrt(0.25 * (p - q) * (p - q) + r * r);
  }
  return a;
}

Integrand Integrand::rotational_lift() const {
  if (n_ != 1) throw DimensionMismatch(1, n_);
  if (!is_plain()) throw ValidationError("rotational lift needs an integrand without rotation or linear term");
  for (const auto& t : poly_.terms())
    if (t.exponents[0] % 2 != 0)
      throw ValidationError("profile integrand is not symmetric under x1 -> -x1; its rotational lift is undefined");
  IntegrandKind kind = IntegrandKind::custom_polynomial;
  if (kind_ == IntegrandKind::isotropic) kind = IntegrandKind::isotropic;
  if (kind_ == IntegrandKind::hexic2d) kind = IntegrandKind::hexic3d;
  if (kind_ == IntegrandKind::hexic2d_rotated) kind = IntegrandKind::hexic3d_rotated;
  Integrand g(2, kind, poly_.lift_about_vertical_axis().normalized());
  g.scale_ = scale_;
  g.mode_ = mode_;
  g.h_ = h_;
  return g;
}

Integrand Integrand::meridian_profile() const {
  if (n_ != 2) throw DimensionMismatch(2, n_);
  if (!linear_.isZero(0.0)) throw ValidationError("meridian profile needs an integrand without linear term");
  // The rotation must fix the vertical axis.
  if (std::abs(std::abs(rotation_(2, 2)) - 1.0) > 1e-12)
    throw ValidationError("integrand is not rotationally symmetric about the x3 axis");
  for (int i = 0; i < 33; ++i) {
    const double theta = -kPi / 2 + kPi * (i + 0.5) / 33;
    const double g0 = evaluate(Direction::from_angles(theta, 0.0));
    for (int j = 1; j < 64; ++j) {
      const double g = evaluate(Direction::from_angles(theta, kTwoPi * j / 64));
      if (std::abs(g - g0) > 1e-12 * std::max(1.0, std::abs(g0)))
        throw ValidationError("integrand is not rotationally symmetric about the x3 axis");
    }
  }
  IntegrandKind kind = IntegrandKind::custom_polynomial;
  if (kind_ == IntegrandKind::isotropic) kind = IntegrandKind::isotropic;
  if (kind_ == IntegrandKind::hexic3d) kind = IntegrandKind::hexic2d;
  if (kind_ == IntegrandKind::hexic3d_rotated) kind = IntegrandKind::hexic2d_rotated;
  HomogeneousPolynomial p = poly_.restrict_to_meridian().normalized();
  if (rotation_(2, 2) < 0.0) {
    // x3 -> -x3 flips the sign of odd powers of the vertical variable.
    std::vector<Monomial> terms = p.terms();
    for (auto& t : terms)
      if (t.exponents[1] % 2) t.coefficient = -t.coefficient;
    p = HomogeneousPolynomial(2, terms);
  }
  Integrand g(1, kind, p);
  g.scale_ = scale_;
  g.mode_ = mode_;
  g.h_ = h_;
  return g;
}

Integrand make_integrand(const IntegrandSpec& spec) {
  if (spec.n != 1 && spec.n != 2) throw ValidationError("integrand spec: n must be 1 or 2");
  auto require_n = [&](int n) {
    if (spec.n != n) throw DimensionMismatch(n, spec.n);
  };
  auto require_no_coefficients = [&] {
    if (!spec.coefficients.empty())
      throw ValidationError("integrand spec: coefficients are only accepted for custom-polynomial");
  };
  std::optional<Integrand> g;
  switch (spec.kind) {
    case IntegrandKind::isotropic:
      require_no_coefficients();
      g = Integrand::isotropic(spec.n);
      break;
    case IntegrandKind::hexic2d:
      require_no_coefficients();
      require_n(1);
      g = Integrand::hexic2d();
      break;
    case IntegrandKind::hexic2d_rotated:
      require_no_coefficients();
      require_n(1);
      g = Integrand::hexic2d_rotated();
      break;
    case IntegrandKind::hexic3d:
      require_no_coefficients();
      require_n(2);
      g = Integrand::hexic3d();
      break;
    case IntegrandKind::hexic3d_rotated:
      require_no_coefficients();
      require_n(2);
      g = Integrand::hexic3d_rotated();
      break;
    case IntegrandKind::custom_polynomial:
      if (spec.coefficients.empty()) throw ValidationError("integrand spec: custom-polynomial needs coefficients");
      g = Integrand::custom(spec.n, HomogeneousPolynomial(spec.n + 1, spec.coefficients));
      break;
  }
  return g->with_derivative_mode(spec.derivative_mode, spec.h);
}

ConvexityReport convexity_report(const Integrand& gamma, int grid_resolution, long long midpoint_pairs,
                                 unsigned long long seed) {
  if (grid_resolution < 64) throw ValidationError("convexity_report: grid resolution must be >= 64");
  ConvexityReport rep;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();
  auto visit = [&](const Direction& nu) {
    const double m = gamma.operator_A(nu).min_eigenvalue;
    if (m < rep.min_eigenvalue) {
      rep.min_eigenvalue = m;
      rep.witness = nu;
    }
  };
  if (gamma.n() == 1) {
    for (int k = 0; k < grid_resolution; ++k) visit(Direction::from_angle(kTwoPi * k / grid_resolution));
  } else {
    const int rows = grid_resolution, cols = 2 * grid_resolution;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        visit(Direction::from_angles(-kPi / 2 + kPi * (i + 0.5) / rows, kTwoPi * j / cols));
  }
  rep.is_convex = rep.min_eigenvalue >= -kTolConvex;

  const int dim = gamma.n() + 1;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> log_step(-3.0, 0.0);
  auto random_unit = [&] {
    VecN v(dim);
    do {
      for (int i = 0; i < dim; ++i) v[i] = normal(rng);
    } while (v.norm() < 1e-12);
    return VecN(v / v.norm());
  };
  rep.midpoint_pairs = midpoint_pairs;
  for (long long p = 0; p < midpoint_pairs; ++p) {
    const VecN x = radius(rng) * random_unit();
    const VecN y = x + x.norm() * std::pow(10.0, log_step(rng)) * random_unit();
    const double mid = gamma.homogeneous_extension(0.5 * (x + y));
    const double avg = 0.5 * (gamma.homogeneous_extension(x) + gamma.homogeneous_extension(y));
    const double excess = mid - avg;
    if (excess > 1e-12 * (x.norm() + y.norm())) {
      ++rep.midpoint_violations;
      if (excess > rep.worst_midpoint_excess) {
        rep.worst_midpoint_excess = excess;
        rep.midpoint_witness_x = x;
        rep.midpoint_witness_y = y;
      }
    }
  }
  rep.midpoint_convex = rep.midpoint_violations == 0;
  if (rep.midpoint_convex != rep.is_convex) {
    std::ostringstream os;
    os.precision(17);
    os << "convexity verdicts disagree: eigenvalue test says " << (rep.is_convex ? "convex" : "non-convex")
       << " (min eigenvalue " << rep.min_eigenvalue << " at " << format_vector(rep.witness.components())
       << "), midpoint test found " << rep.midpoint_violations << " violations";
    if (rep.midpoint_violations > 0)
      os << " (worst at x=" << format_vector(rep.midpoint_witness_x)
         << ", y=" << format_vector(rep.midpoint_witness_y) << ")";
    throw NumericalError(os.str());
  }
  return rep;
}

}  // namespace aniso
