#include "doctest.h"

#include "aniso/catalogue.hpp"
#include "aniso/enumeration.hpp"
#include "aniso/errors.hpp"
#include "oracles.hpp"

using namespace aniso;

namespace {

const EnumerationResult& hexic_result() {
  static const EnumerationResult r = enumerate_closed_camc(Integrand::hexic2d());
  return r;
}

}  // namespace

TEST_CASE("frontier graph of hexic2d: corners and crossings as nodes") {
  const FrontierGraph fg = frontier_graph(Integrand::hexic2d());
  CHECK(fg.nodes.size() == 8);
  CHECK(fg.edges.size() == 16);
}

TEST_CASE("every catalogue CAMC curve is found by the enumeration") {
  const Integrand g = Integrand::hexic2d();
  const EnumerationResult& r = hexic_result();
  CHECK(r.classes.size() >= 5);
  for (const auto& c : r.classes) CHECK(c.lambda == doctest::Approx(-1.0).epsilon(5e-3));
  for (const std::string name : {"wulff", "Cgamma1", "Cgamma2", "Cgamma3", "Cgamma4"}) {
    const ClosedCurve c = stitch(g, catalogue_curve(g, name), 1024);
    CHECK_MESSAGE(find_class(r, shape_samples(g, c), 1e-6) >= 0, name);
  }
  const ClosedCurve c5 = stitch(g, catalogue_curve(g, "Cgamma5"), 1024);
  CHECK(find_class(r, shape_samples(g, c5), 1e-6) < 0);
}

TEST_CASE("class count is stable under the symmetries of the square") {
  const EnumerationResult& r = hexic_result();
  for (const auto& m : square_symmetries()) {
    for (const auto& c : r.classes) {
      const ShapeSamples moved = transformed(r.curves[c.representative].shape, m);
      CHECK(find_class(r, moved, 1e-6) == c.id);
    }
  }
}

TEST_CASE("congruence detects rigid motions and rejects distinct shapes") {
  const Integrand g = Integrand::hexic2d();
  const ShapeSamples a = shape_samples(g, stitch(g, catalogue_curve(g, "Cgamma1"), 512), 1024);
  Eigen::Matrix2d rot;
  const double q = 0.3;
  rot << std::cos(q), -std::sin(q), std::sin(q), std::cos(q);
  CHECK(congruent(a, transformed(a, rot), 1e-6));
  const ShapeSamples b = shape_samples(g, stitch(g, catalogue_curve(g, "Cgamma4"), 512), 1024);
  CHECK_FALSE(congruent(a, b, 1e-6));
}

TEST_CASE("rotated integrand gives rotated classes") {
  const EnumerationResult rr = enumerate_closed_camc(Integrand::hexic2d_rotated());
  const EnumerationResult& r = hexic_result();
  REQUIRE(rr.classes.size() == r.classes.size());
  Eigen::Matrix2d rot;
  const double q = oracle::pi / 4;
  rot << std::cos(q), -std::sin(q), std::sin(q), std::cos(q);
  for (const auto& c : r.classes) CHECK(find_class(rr, transformed(r.curves[c.representative].shape, rot), 1e-6) >= 0);
}

TEST_CASE("isotropic integrand has one class, the circle") {
  const EnumerationResult r = enumerate_closed_camc(Integrand::isotropic(1));
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0].area == doctest::Approx(oracle::pi).epsilon(1e-5));
}

TEST_CASE("path cap is enforced") {
  EnumerationOptions o;
  o.cap = 5;
  CHECK_THROWS_AS(enumerate_closed_camc(Integrand::hexic2d(), o), ResourceCapError);
}
