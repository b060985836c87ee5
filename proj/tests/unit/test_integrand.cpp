#include "doctest.h"

#include <random>

#include "aniso/errors.hpp"
#include "aniso/integrand.hpp"
#include "oracles.hpp"

using namespace aniso;

namespace {

std::vector<Direction> random_directions(int n, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Direction> out;
  for (int i = 0; i < count; ++i) {
    VecN v(n + 1);
    for (int k = 0; k <= n; ++k) v(k) = g(rng);
    out.push_back(Direction::from_vector(v));
  }
  return out;
}

std::vector<Integrand> builtins() {
  return {Integrand::isotropic(1), Integrand::hexic2d(),         Integrand::hexic2d_rotated(),
          Integrand::isotropic(2), Integrand::hexic3d(),         Integrand::hexic3d_rotated()};
}

}  // namespace

TEST_CASE("hexic2d matches the closed forms for gamma, xi and A") {
  const Integrand g = Integrand::hexic2d();
  for (int k = 0; k < 1024; ++k) {
    const double t = 2.0 * oracle::pi * (k + 0.37) / 1024.0;
    const Direction nu = Direction::from_angle(t);
    CHECK(g.evaluate(nu) == doctest::Approx(oracle::hexic_gamma(t)).epsilon(1e-14));
    const VecN xi = g.extension_gradient(nu);
    const auto ref = oracle::hexic_xi(t);
    CHECK(std::abs(xi(0) - ref[0]) < 1e-13);
    CHECK(std::abs(xi(1) - ref[1]) < 1e-13);
    CHECK(std::abs(g.operator_A(nu).determinant - oracle::hexic_A(t)) < 1e-12);
  }
}

TEST_CASE("hexic3d is the rotation of hexic2d about the vertical axis") {
  const Integrand g3 = Integrand::hexic3d();
  for (const auto& nu : random_directions(2, 1024, 3)) {
    const double lat = nu.theta();
    CHECK(g3.evaluate(nu) == doctest::Approx(oracle::hexic_gamma(lat)).epsilon(1e-13));
  }
}

TEST_CASE("Euler relation, homogeneity and scaling hold on every builtin") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> r(0.0, 5.0);
  for (const auto& g : builtins()) {
    const Integrand g3 = g.scaled(2.5);
    for (const auto& nu : random_directions(g.n(), 1024, 5)) {
      const VecN x = nu.components();
      CHECK(std::abs(g.extension_gradient(nu).dot(x) - g.evaluate(nu)) < 1e-8);
      const double s = r(rng);
      CHECK(std::abs(g.homogeneous_extension(s * x) - s * g.homogeneous_extension(x)) < 1e-10);
      CHECK((g3.extension_gradient(nu) - 2.5 * g.extension_gradient(nu)).norm() < 1e-10);
    }
  }
}

TEST_CASE("a linear term shifts the Cahn-Hoffman map by that vector") {
  VecN a(2);
  a << 0.1, -0.05;
  const Integrand g = Integrand::hexic2d();
  const Integrand h = g.plus_linear(a);
  for (const auto& nu : random_directions(1, 1024, 7))
    CHECK((h.extension_gradient(nu) - g.extension_gradient(nu) - a).norm() < 1e-10);
  VecN big(2);
  big << 2.0, 0.0;
  CHECK_THROWS_AS(g.plus_linear(big), ValidationError);
}

TEST_CASE("analytic and numeric derivatives agree on the builtins") {
  for (const auto& g : builtins()) {
    const Integrand num = g.with_derivative_mode(DerivativeMode::numeric);
    for (const auto& nu : random_directions(g.n(), 1024, 13)) {
      CHECK((g.extension_gradient(nu) - num.extension_gradient(nu)).norm() < 1e-6);
      CHECK((g.operator_A(nu).value - num.operator_A(nu).value).norm() < 1e-4);
    }
  }
}

TEST_CASE("rotating hexic2d by pi/4 gives hexic2d-rotated") {
  const Integrand g = Integrand::hexic2d();
  const Integrand r = Integrand::hexic2d_rotated();
  const double q = oracle::pi / 4.0;
  for (const auto& nu : random_directions(1, 1024, 17)) {
    const double t = nu.theta();
    const VecN a = r.extension_gradient(nu);
    const VecN b = g.extension_gradient(Direction::from_angle(t - q));
    CHECK(std::abs(a(0) - (std::cos(q) * b(0) - std::sin(q) * b(1))) < 1e-10);
    CHECK(std::abs(a(1) - (std::sin(q) * b(0) + std::cos(q) * b(1))) < 1e-10);
  }
}

TEST_CASE("custom polynomial spec reproduces hexic2d") {
  IntegrandSpec s;
  s.n = 1;
  s.kind = IntegrandKind::custom_polynomial;
  s.coefficients = {{1.0, {6, 0, 0}}, {1.0, {0, 6, 0}}};
  const Integrand c = make_integrand(s);
  const Integrand h = Integrand::hexic2d();
  for (const auto& nu : random_directions(1, 256, 19))
    CHECK((c.extension_gradient(nu) - h.extension_gradient(nu)).norm() < 1e-14);
}

TEST_CASE("invalid integrand specs are rejected") {
  IntegrandSpec s;
  s.n = 1;
  s.kind = IntegrandKind::custom_polynomial;
  s.coefficients = {{1.0, {3, 0, 0}}};
  CHECK_THROWS_AS(make_integrand(s), ValidationError);  // odd degree
  s.coefficients = {{1.0, {2, 0, 0}}, {-1.0, {0, 2, 0}}};
  CHECK_THROWS_AS(make_integrand(s), ValidationError);  // not positive
  s.coefficients = {{1.0, {2, 0, 0}}, {1.0, {0, 4, 0}}};
  CHECK_THROWS_AS(make_integrand(s), ValidationError);  // not homogeneous
  CHECK_THROWS_AS(Integrand::hexic2d().evaluate(Direction::from_angles(0.1, 0.2)), DimensionMismatch);
  CHECK_THROWS_AS(integrand_kind_from_string("octic"), ValidationError);
}

TEST_CASE("convexity verdicts") {
  CHECK(convexity_report(Integrand::isotropic(1), 1024).is_convex);
  CHECK(convexity_report(Integrand::isotropic(2), 64).is_convex);
  const ConvexityReport h = convexity_report(Integrand::hexic2d(), 1024);
  CHECK_FALSE(h.is_convex);
  CHECK_FALSE(h.midpoint_convex);
  CHECK(h.min_eigenvalue == doctest::Approx(0.625 - 5.625).epsilon(1e-6));
  CHECK_FALSE(convexity_report(Integrand::hexic3d(), 64).is_convex);
  CHECK_FALSE(convexity_report(Integrand::hexic3d_rotated(), 64).is_convex);
}

TEST_CASE("rotational lift and meridian profile are inverse") {
  const Integrand lifted = Integrand::hexic2d().rotational_lift();
  const Integrand g3 = Integrand::hexic3d();
  for (const auto& nu : random_directions(2, 256, 23)) CHECK(lifted.evaluate(nu) == doctest::Approx(g3.evaluate(nu)));
  const Integrand prof = g3.meridian_profile();
  for (const auto& nu : random_directions(1, 256, 29))
    CHECK(prof.evaluate(nu) == doctest::Approx(Integrand::hexic2d().evaluate(nu)));
  IntegrandSpec odd;
  odd.n = 1;
  odd.kind = IntegrandKind::custom_polynomial;
  odd.coefficients = {{1.0, {6, 0, 0}}, {1.0, {0, 6, 0}}, {0.1, {5, 1, 0}}};
  CHECK_THROWS_AS(make_integrand(odd).rotational_lift(), ValidationError);
}
