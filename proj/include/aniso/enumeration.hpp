#pragma once

#include <vector>

#include "aniso/curves.hpp"

namespace aniso {

/// Nodes are frontier self-intersections and corner coincidences; edges are
/// frontier arcs between consecutive breakpoint parameters.
struct FrontierGraph {
  struct Edge {
    int a = 0, b = 0;  // node indices at `from` and `to`
    double from = 0.0, to = 0.0;
  };
  std::vector<Vec2> nodes;
  std::vector<double> breakpoints;  // sorted in [0, 2*pi)
  std::vector<Edge> edges;
};

FrontierGraph frontier_graph(const Integrand& gamma, int frontier_resolution = 4096);

/// Sampled outline used for congruence matching: on-curve samples plus a
/// denser polyline of the same curve.
struct ShapeSamples {
  std::vector<Vec2> sample;
  std::vector<Vec2> dense;
  double area = 0.0;  // absolute signed area
  double perimeter = 0.0;
};

ShapeSamples shape_samples(const Integrand& gamma, const ClosedCurve& curve, int dense_per_arc = 4096);
ShapeSamples transformed(const ShapeSamples& s, const Eigen::Matrix2d& m);

/// True when some rotation or reflection followed by a translation maps `a`
/// onto `b` with Hausdorff distance at most `tol`.
bool congruent(const ShapeSamples& a, const ShapeSamples& b, double tol);

/// Greedy class assignment in input order; returns one class id per shape.
std::vector<int> congruence_classes(const std::vector<ShapeSamples>& shapes, double tol);

/// The order-8 dihedral group of the square as 2x2 matrices.
std::vector<Eigen::Matrix2d> square_symmetries();

struct EnumerationOptions {
  int resolution = 1024;  // samples per stitched arc
  int frontier_resolution = 4096;
  int dense_per_arc = 4096;
  long long cap = 1000000;  // partial paths explored
  double tol_camc = kTolCamc;
  double match_tol = 1e-6;
};

struct EnumeratedCurve {
  ArcSpec spec;
  ClosedCurve curve;
  CamcVerdict verdict;
  ShapeSamples shape;
  int class_id = -1;
};

struct CongruenceClass {
  int id = 0;
  int representative = 0;  // index into EnumerationResult::curves
  int members = 0;
  double lambda = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
  bool embedded = false;
};

struct EnumerationResult {
  FrontierGraph graph;
  long long simple_cycles = 0;
  long long partial_paths = 0;
  std::vector<EnumeratedCurve> curves;  // CAMC cycles only
  std::vector<CongruenceClass> classes;
};

EnumerationResult enumerate_closed_camc(const Integrand& gamma, const EnumerationOptions& options = {});

/// Class whose representative is congruent to `curve`, or -1.
int find_class(const EnumerationResult& result, const ShapeSamples& shape, double tol);

}  // namespace aniso
