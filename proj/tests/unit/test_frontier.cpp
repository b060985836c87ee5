#include "doctest.h"

#include <algorithm>

#include "aniso/catalogue.hpp"
#include "aniso/frontier.hpp"
#include "aniso/geometry.hpp"
#include "oracles.hpp"

using namespace aniso;

TEST_CASE("singular set of hexic2d is cos 4t = 1/9") {
  const SingularSet s = singular_set(Integrand::hexic2d());
  const auto ref = oracle::hexic_roots();
  std::vector<double> sorted(ref.begin(), ref.end());
  std::sort(sorted.begin(), sorted.end());
  REQUIRE(s.roots.size() == 8);
  for (int k = 0; k < 8; ++k) {
    CHECK(std::abs(s.roots[k].theta - sorted[k]) < 1e-12);
    CHECK_FALSE(s.roots[k].degenerate);
  }
  CHECK(s.identifications.size() == 4);
  for (const auto& [a, b] : s.identifications) CHECK((s.roots[a].image - s.roots[b].image).norm() < 1e-9);
}

TEST_CASE("corner images are (2/sqrt 3)(+-1, +-1)") {
  const SingularSet s = singular_set(Integrand::hexic2d());
  const double c = 2.0 / std::sqrt(3.0);
  for (const auto& r : s.roots) {
    CHECK(std::abs(std::abs(r.image.x()) - c) < 1e-9);
    CHECK(std::abs(std::abs(r.image.y()) - c) < 1e-9);
  }
}

TEST_CASE("frontier tangent is A times the unit tangent") {
  const Integrand g = Integrand::hexic2d();
  const double h = 1e-5;
  for (int k = 0; k < 1024; ++k) {
    const double t = 2.0 * oracle::pi * (k + 0.5) / 1024.0;
    const Vec2 d = (frontier_point(g, t + h) - frontier_point(g, t - h)) / (2.0 * h);
    const double c = std::cos(t), s = std::sin(t);
    const double f = 5.0 * (9.0 * std::pow(c, 4) - 9.0 * c * c + 1.0);
    CHECK((d - Vec2(f * s, -f * c)).norm() < 1e-8);
    CHECK(std::abs(d.norm() - std::abs(oracle::hexic_A(t))) < 1e-8);
  }
}

TEST_CASE("crossings of hexic2d match the closed form for rho1") {
  const Integrand g = Integrand::hexic2d();
  const auto samples = sample_frontier(g, 4096);
  const SelfIntersections si = self_intersections(g, samples);
  const double rho1 = oracle::hexic_rho1();
  const double rho2 = oracle::pi / 2.0 - rho1;
  const auto xi2 = oracle::hexic_xi(rho2);
  const double alpha = std::hypot(xi2[0], xi2[1]);
  CHECK(std::abs(xi2[0] - (-oracle::hexic_xi(rho1 + oracle::pi / 2.0)[0])) < 1e-14);
  bool found = false;
  for (const auto& c : si.crossings) {
    if (std::abs(c.theta_a - rho1) < 1e-9 || std::abs(c.theta_b - rho1) < 1e-9) found = true;
    if (c.inner) CHECK(std::abs(c.point.norm() - alpha) < 1e-9);
  }
  CHECK(found);
  const HexicLandmarks lm = hexic_landmarks(g);
  CHECK(std::abs(lm.rho1 - rho1) < 1e-10);
  CHECK(std::abs(lm.alpha - alpha) < 1e-10);
  CHECK(lm.theta[0] == doctest::Approx(std::acos(1.0 / 9.0) / 4.0).epsilon(1e-12));
  CHECK(std::abs(lm.alpha - 0.3467370642) < 1e-9);
  CHECK(si.corners.size() == 4);
}

TEST_CASE("hexic2d frontier has the symmetries of the square") {
  const Integrand g = Integrand::hexic2d();
  const auto samples = sample_frontier(g, 2048);
  std::vector<Vec2> pts;
  for (const auto& s : samples) pts.emplace_back(s.xi(0), s.xi(1));
  for (int k = 0; k < 2048; k += 7) {
    const double t = samples[k].theta;
    const Vec2 p = pts[k];
    // theta -> -theta reflects in the x axis, theta -> pi/2 - theta swaps the axes.
    CHECK((frontier_point(g, -t) - Vec2(p.x(), -p.y())).norm() < 1e-12);
    CHECK((frontier_point(g, oracle::pi / 2 - t) - Vec2(p.y(), p.x())).norm() < 1e-12);
  }
}

TEST_CASE("isotropic frontier is the unit circle with no singular points") {
  const Integrand g = Integrand::isotropic(1);
  CHECK(singular_set(g).roots.empty());
  for (const auto& s : sample_frontier(g, 1024)) CHECK(std::abs(s.xi.norm() - 1.0) < 1e-14);
  CHECK(self_intersections(g, sample_frontier(g, 1024)).crossings.empty());
}

TEST_CASE("half-space Wulff shape vertices satisfy the support inequality") {
  for (const auto& g : {Integrand::hexic2d(), Integrand::hexic2d_rotated(), Integrand::isotropic(1)}) {
    const WulffShape w = wulff_halfspace(g, 4096);
    for (const auto& v : w.vertices) {
      const double e = max_support_excess(g, v, 4096);
      CHECK(e <= 1e-9);
      CHECK(e >= -1e-6);
    }
  }
}

TEST_CASE("hexic2d Wulff shape has four corners on the axes at distance alpha") {
  const Integrand g = Integrand::hexic2d();
  const WulffShape w = wulff_halfspace(g, 4096);
  REQUIRE(w.corners.size() == 4);
  const double rho1 = oracle::hexic_rho1();
  const auto xi = oracle::hexic_xi(oracle::pi / 2.0 - rho1);
  const double alpha = std::hypot(xi[0], xi[1]);
  for (int k : w.corners) {
    const Vec2 p = w.vertices[k];
    CHECK(std::min(std::abs(p.x()), std::abs(p.y())) < 1e-5);
    CHECK(std::abs(p.norm() - alpha) < 1e-5);
  }
}

TEST_CASE("Wulff constructions agree for the isotropic integrand") {
  const WulffComparison c = compare_wulff_constructions(Integrand::isotropic(1), 4096);
  CHECK(c.hausdorff < 1e-6);
}

TEST_CASE("Wulff arcs of hexic2d are the four arcs between the crossings") {
  const Integrand g = Integrand::hexic2d();
  const SingularSet s = singular_set(g);
  const auto si = self_intersections(g, sample_frontier(g, 4096));
  const ArcSpec a = wulff_arcs(g, s, si.crossings);
  REQUIRE(a.arcs.size() == 4);
  const double rho1 = oracle::hexic_rho1();
  for (const auto& arc : a.arcs) {
    CHECK(arc.length() == doctest::Approx(oracle::pi / 2.0 - 2.0 * rho1).epsilon(1e-9));
    CHECK(oracle::hexic_A(0.5 * (arc.from + arc.to)) > 0.0);
  }
}

TEST_CASE("geometry kernel") {
  CHECK(signed_area({Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)}) == doctest::Approx(1.0));
  CHECK(point_segment_distance(Vec2(0.5, 1.0), Vec2(0, 0), Vec2(1, 0)) == doctest::Approx(1.0));
  const auto x = polyline_self_crossings({Vec2(0, 0), Vec2(1, 1), Vec2(1, 0), Vec2(0, 1)}, true);
  REQUIRE(x.size() == 1);
  CHECK((x[0].point - Vec2(0.5, 0.5)).norm() < 1e-15);
}
