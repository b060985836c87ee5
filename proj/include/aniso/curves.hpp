#pragma once

#include <string>
#include <vector>

#include "aniso/arcs.hpp"
#include "aniso/integrand.hpp"

namespace aniso {

inline constexpr int kJunctionWindow = 3;
inline constexpr double kTolCamc = 5e-3;
inline constexpr double kTolJunction = 1e-9;
inline constexpr double kTolClosure = 1e-9;

/// A maximal sub-interval of one arc on which det A keeps its sign.
struct CurvePiece {
  Arc arc;
  int arc_index = 0;
  int outward_sign = 1;  // +1: outward normal is nu, -1: it is -nu
  int detA_sign = 1;
  int first = 0;  // index of the first point
  int count = 0;
};

/// A closed plane curve stitched from frontier arcs, counterclockwise.
struct ClosedCurve {
  std::vector<Vec2> points;  // closed; the first point is not repeated
  std::vector<double> params;
  std::vector<Vec2> normal;  // outward unit normal
  std::vector<Vec2> xi;      // Cahn-Hoffman field at the outward normal
  std::vector<int> piece;    // piece index of each point
  std::vector<double> lambda;
  std::vector<bool> excluded;
  std::vector<CurvePiece> pieces;
  ArcSpec spec;  // arcs in traversal order after orientation normalization
  double signed_area = 0.0;
  double max_junction_jump = 0.0;  // largest one-sided xi mismatch at piece ends
  bool embedded = true;
  int window = kJunctionWindow;

  std::size_t size() const { return points.size(); }
  /// r * X with xi unchanged and Lambda recomputed on the scaled polyline.
  ClosedCurve scaled(double r) const;
};

struct StitchOptions {
  int window = kJunctionWindow;
  bool normalize_orientation = true;  // false: keep the given traversal
};

/// Sample the arcs (`resolution` points per arc, split over its pieces) into a
/// closed curve. Throws ValidationError with the gap vector if consecutive arc
/// endpoint images differ by more than 1e-9.
ClosedCurve stitch(const Integrand& gamma, const ArcSpec& arcs, int resolution, const StitchOptions& options = {});

struct CurvatureField {
  std::vector<double> lambda;
  std::vector<bool> excluded;
};

/// Lambda = -<d xi / ds, t> by central differences over the chord from the
/// previous to the next point; points within `window`
/// samples of a piece boundary are excluded.
CurvatureField anisotropic_curvature_along(const ClosedCurve& curve, int window = kJunctionWindow);

struct PieceProfile {
  Arc arc;
  int samples = 0;
  double mean = 0.0, min = 0.0, max = 0.0;
};

struct CamcVerdict {
  bool camc = false;
  double lambda = 0.0;  // mean over non-excluded samples
  double max_deviation = 0.0;
  double max_junction_jump = 0.0;
  double tolerance = 0.0;
  std::vector<PieceProfile> profile;
};

CamcVerdict classify(const ClosedCurve& curve, double tol_camc = kTolCamc);

struct ConvergenceReport {
  CamcVerdict coarse, fine;
  double ratio = 0.0;  // coarse / fine deviation; 0 when both are at the floor
  bool converged = false;
};

/// Classify at `resolution` and 2*resolution; CAMC deviations must shrink by
/// at least 3x unless already below 1e-10.
ConvergenceReport classify_with_refinement(const Integrand& gamma, const ArcSpec& arcs, int resolution,
                                           double tol_camc = kTolCamc);

/// Trapezoidal integral of gamma(normal) against arclength.
double energy_of_curve(const ClosedCurve& curve, const Integrand& gamma);

/// Order unordered parameter intervals into a closed chain by matching
/// endpoint images; intervals may be traversed in either direction.
ArcSpec chain_arcs(const Integrand& gamma, const std::vector<Arc>& intervals, const std::string& name = "");

}  // namespace aniso
