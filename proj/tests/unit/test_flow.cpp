#include "doctest.h"

#include "aniso/catalogue.hpp"
#include "aniso/errors.hpp"
#include "aniso/flow.hpp"
#include "oracles.hpp"

using namespace aniso;

namespace {

FlowFamily wulff_family(double c) {
  const Integrand g = Integrand::hexic2d();
  return make_flow_family(g, c, stitch(g, catalogue_curve(g, "wulff"), 4096));
}

}  // namespace

TEST_CASE("scale and extinction") {
  const FlowFamily f = wulff_family(1.0);
  CHECK(f.scale(0.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(f.scale(1.0) == 0.0);
  CHECK(f.scale(1.0 - 1e-12) < 1e-5);
  CHECK_THROWS_AS(family_at(f, 1.0), ValidationError);
  CHECK_THROWS_AS(family_at(f, 1.5), ValidationError);
  CHECK_THROWS_AS(flow_residual(f, 0.99, 0.02), ValidationError);
}

TEST_CASE("Lambda of the scaled Wulff curve is -1/scale") {
  const FlowFamily f = wulff_family(1.0);
  const FlowState s = family_at(f, 0.875);
  CHECK(s.scale == doctest::Approx(0.5));
  CHECK(std::abs(s.lambda_expected + 2.0) < 1e-9);
  CHECK(std::abs(s.lambda_min + 2.0) < 2e-2);
  CHECK(std::abs(s.lambda_max + 2.0) < 2e-2);
}

TEST_CASE("energy scales linearly for curves and decreases in time") {
  const FlowFamily f = wulff_family(1.0);
  const double base = energy_of_curve(std::get<ClosedCurve>(f.base), f.integrand);
  double prev = 1e300;
  for (double t : {-1.0, 0.0, 0.3, 0.6, 0.9, 0.99}) {
    const double e = energy_at(f, t);
    CHECK(std::abs(e - f.scale(t) * base) < 1e-9);
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("flow residual is second order in dt") {
  const FlowFamily f = wulff_family(1.0);
  for (double dt = 1e-2; dt > 2e-4; dt /= 2) CHECK(flow_residual(f, 0.0, dt / 2) <= 0.3 * flow_residual(f, 0.0, dt));
}

TEST_CASE("dissipation identity for curves and surfaces") {
  const FlowFamily f = wulff_family(1.0);
  const DissipationReport d = dissipation_check(f, 0.0, 1e-4);
  const double base = energy_of_curve(std::get<ClosedCurve>(f.base), f.integrand);
  CHECK(d.analytic_lhs == doctest::Approx(-base / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(d.lhs - d.rhs) <= 1e-4 * std::abs(d.rhs));
  CHECK(std::abs(d.lhs - d.analytic_lhs) <= 1e-6 * std::abs(d.rhs));

  const Integrand iso = Integrand::isotropic(2);
  const SurfaceMesh sphere = mesh_frontier_surface(iso, ArcSpec{"sphere", {{0.0, 2 * oracle::pi}}}, 128, 128);
  const FlowFamily fs = make_flow_family(iso, 1.0, sphere);
  const DissipationReport ds = dissipation_check(fs, 0.0, 1e-4);
  // d/dt of 4 pi * 2 (c - t) is -8 pi.
  CHECK(ds.lhs == doctest::Approx(-8 * oracle::pi).epsilon(1e-3));
  CHECK(std::abs(ds.lhs - ds.rhs) <= 1e-4 * std::abs(ds.rhs));
  CHECK(std::abs(energy_at(fs, 0.5) - energy_of_surface(sphere, iso)) < 1e-12);
  CHECK(flow_residual(fs, 0.0, 1e-4) < 1e-8);
}

TEST_CASE("a non-CAMC base does not move self-similarly") {
  std::vector<Vec2> pts;
  for (int i = 0; i < 1024; ++i) {
    const double t = 2 * oracle::pi * i / 1024;
    pts.emplace_back(2 * std::cos(t), std::sin(t));
  }
  const Integrand iso = Integrand::isotropic(1);
  const FlowFamily f = make_flow_family(iso, 1.0, curve_from_polyline(iso, pts));
  CHECK(flow_residual(f, 0.0, 1e-4) > 0.1);
}
