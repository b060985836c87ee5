#include "doctest.h"

#include <sstream>

#include "aniso/catalogue.hpp"
#include "aniso/errors.hpp"
#include "aniso/surfaces.hpp"
#include "oracles.hpp"

using namespace aniso;

namespace {

SurfaceMesh unit_sphere(int res) {
  return mesh_frontier_surface(Integrand::isotropic(2), ArcSpec{"sphere", {{0.0, 2 * oracle::pi}}}, res, res);
}

}  // namespace

TEST_CASE("isotropic sphere: Lambda = -1, H2 = 1, area 4 pi") {
  const SurfaceMesh m = unit_sphere(256);
  CHECK_FALSE(m.cyclic_rows);
  CHECK(is_watertight(m));
  const CamcVerdict v = classify_surface(m);
  CHECK(v.camc);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.excluded[i]) continue;
    CHECK(std::abs(m.lambda[i] + 1.0) < 1e-8);
    CHECK(std::abs(m.H2[i] - 1.0) < 1e-8);
  }
  CHECK(std::abs(energy_of_surface(m, Integrand::isotropic(2)) - 4 * oracle::pi) < 1e-3);
}

TEST_CASE("hexic3d energy of the unit sphere matches quadrature") {
  const SurfaceMesh m = unit_sphere(256);
  const double ref = oracle::sphere_integral_zonal([](double z) {
    const double r2 = 1.0 - z * z;
    return r2 * r2 * r2 + std::pow(z, 6);
  });
  CHECK(ref == doctest::Approx(12.0 * oracle::pi / 5.0).epsilon(1e-13));
  CHECK(std::abs(energy_of_surface(m, Integrand::hexic3d()) - ref) < 1e-3);
}

TEST_CASE("rotated Wulff profile is CAMC with axisymmetric real curvatures") {
  const Integrand g3 = Integrand::hexic3d();
  const Integrand prof = g3.meridian_profile();
  const SurfaceMesh m = mesh_frontier_surface(g3, catalogue_curve(prof, "wulff"), 128, 128);
  const CamcVerdict v = classify_surface(m);
  CHECK(v.camc);
  CHECK(std::abs(v.lambda + 1.0) < 1e-2);
  for (int i = 0; i < m.rows; ++i) {
    const std::size_t i0 = m.index(i, 0);
    if (m.excluded[i0]) continue;
    for (int j = 0; j < m.cols; ++j) {
      const std::size_t k = m.index(i, j);
      CHECK(std::abs(m.lambda[k] - m.lambda[i0]) < 1e-8);
      CHECK(m.lambda[k] * m.lambda[k] >= m.H2[k] - 1e-10);
      CHECK(std::isfinite(m.k1[k]));
      CHECK(std::isfinite(m.k2[k]));
      // Meridian curvature equals the profile curvature, -1.
      CHECK(std::min(std::abs(m.k1[k] + 1.0), std::abs(m.k2[k] + 1.0)) < 1e-3);
    }
  }
}

TEST_CASE("rotated Cgamma5 is a torus-like surface that is not CAMC") {
  const Integrand g3 = Integrand::hexic3d();
  const SurfaceMesh m = mesh_frontier_surface(g3, catalogue_curve(g3.meridian_profile(), "Cgamma5"), 128, 128);
  CHECK(m.cyclic_rows);
  const CamcVerdict v = classify_surface(m);
  CHECK_FALSE(v.camc);
  bool plus = false, minus = false;
  for (const auto& p : v.profile) {
    plus = plus || std::abs(p.mean - 1.0) < 1e-2;
    minus = minus || std::abs(p.mean + 1.0) < 1e-2;
  }
  CHECK(plus);
  CHECK(minus);
}

TEST_CASE("OBJ export has one vertex line per distinct point") {
  const SurfaceMesh m = unit_sphere(64 * 2);
  const std::string obj = to_obj(m);
  std::istringstream in(obj);
  std::string line;
  int v = 0, f = 0;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
  }
  CHECK(v > 0);
  CHECK(f > 0);
}

TEST_CASE("surface inputs are validated") {
  const Integrand g3 = Integrand::hexic3d();
  CHECK_THROWS_AS(mesh_frontier_surface(g3, catalogue_curve(g3.meridian_profile(), "wulff"), 8, 8), ValidationError);
  CHECK_THROWS_AS(mesh_frontier_surface(g3, catalogue_curve(g3.meridian_profile(), "Cgamma2"), 64, 128), ValidationError);
  IntegrandSpec cube;
  cube.n = 2;
  cube.kind = IntegrandKind::custom_polynomial;
  cube.coefficients = {{1.0, {6, 0, 0}}, {1.0, {0, 6, 0}}, {1.0, {0, 0, 6}}};
  CHECK_THROWS_AS(make_integrand(cube).meridian_profile(), ValidationError);
}
