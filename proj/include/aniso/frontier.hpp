#pragma once

#include <utility>
#include <vector>

#include "aniso/arcs.hpp"
#include "aniso/integrand.hpp"

namespace aniso {

inline constexpr double kTolSing = 1e-10;
inline constexpr int kSingularGrid = 4096;

/// One point of the Cahn-Hoffman image xi(S^n).
struct FrontierSample {
  double theta = 0.0;
  double rho = 0.0;  // n = 2 only
  Direction nu = Direction::from_angle(0.0);
  VecN xi;
  SphereOperatorA A;
  int detA_sign = 0;  // 0 when |det A| <= tol_sing
};

FrontierSample frontier_sample(const Integrand& gamma, const Direction& nu, double tol_sing = kTolSing);
/// n = 1: xi(cos t, sin t) as a plane point.
Vec2 frontier_point(const Integrand& gamma, double theta);

/// Uniform parameter samples: theta_k = 2*pi*k/resolution for n = 1; for n = 2 a
/// grid of `resolution` latitudes (poles included) by 2*resolution azimuths.
std::vector<FrontierSample> sample_frontier(const Integrand& gamma, int resolution, double tol_sing = kTolSing);

struct SingularRoot {
  double theta = 0.0;
  Vec2 image;
  bool degenerate = false;  // det A vanishes without changing sign
};

struct SingularSet {
  std::vector<SingularRoot> roots;  // sorted by theta in [0, 2*pi)
  std::vector<std::pair<int, int>> identifications;  // root index pairs with coincident images
};

/// Zeros of det A on S^1, bracketed on a uniform grid and bisected to 1e-13.
SingularSet singular_set(const Integrand& gamma, double tol_sing = kTolSing, int grid = kSingularGrid);

/// Singular parameters (all 2*pi translates) strictly inside (lo, hi), sorted.
std::vector<double> singular_parameters_in(const SingularSet& singular, double lo, double hi);

struct Crossing {
  Vec2 point;
  double theta_a = 0.0, theta_b = 0.0;  // theta_a < theta_b, both in [0, 2*pi)
  bool inner = false;  // the point lies in the Wulff shape
};

struct SelfIntersections {
  std::vector<Crossing> crossings;  // transverse crossings, sorted by theta_a
  std::vector<Crossing> corners;    // coincident images of two singular parameters
};

/// Crossings of the closed polyline through `samples` (uniform n = 1 samples
/// from sample_frontier), refined on the frontier itself.
SelfIntersections self_intersections(const Integrand& gamma, const std::vector<FrontierSample>& samples);

struct WulffShape {
  int n = 1;
  bool rotational = false;  // n = 2: `vertices` is the meridian profile in (x1, x3)
  std::vector<Vec2> vertices;  // counterclockwise
  std::vector<int> corners;    // vertex indices with a large exterior angle
  // Outward normal angles of the two edges meeting at each corner.
  std::vector<std::pair<double, double>> corner_normal_ranges;
};

/// Intersection of `resolution` half-planes <x, nu_k> <= gamma(nu_k) with
/// uniformly spaced normals.
WulffShape wulff_halfspace(const Integrand& gamma, int resolution);

/// Frontier arcs that form the boundary of the Wulff shape, delimited by the
/// given crossings. n = 1.
ArcSpec wulff_arcs(const Integrand& gamma, const SingularSet& singular, const std::vector<Crossing>& crossings);

/// Largest <x, nu> - gamma(nu) over `directions` uniformly spaced nu; <= 0
/// exactly when x lies in the sampled Wulff shape.
double max_support_excess(const Integrand& gamma, const Vec2& x, int directions = 4096);

struct WulffComparison {
  double hausdorff = 0.0;
  std::size_t polygon_vertices = 0;
  std::size_t arc_points = 0;
};

/// Hausdorff distance between the half-space polygon and the frontier-arc
/// boundary, both at `resolution` (half-planes, and samples per arc).
WulffComparison compare_wulff_constructions(const Integrand& gamma, int resolution);

/// Sample each arc with `per_arc` points (endpoints included) and concatenate,
/// dropping the duplicated junction points.
std::vector<Vec2> sample_arcs(const Integrand& gamma, const ArcSpec& spec, int per_arc);

}  // namespace aniso
