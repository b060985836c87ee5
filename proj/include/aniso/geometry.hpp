#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "aniso/types.hpp"

namespace aniso {

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Shoelace area of a closed polygon given without a repeated final vertex.
double signed_area(const std::vector<Vec2>& polygon);

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

/// Intersection of the lines p0 + s*d0 and p1 + t*d1. Returns false when the
/// lines are parallel to within `tol` (relative).
bool line_intersection(const Vec2& p0, const Vec2& d0, const Vec2& p1, const Vec2& d1, double& s, double& t,
                       double tol = 1e-14);

/// Nearest-distance queries against a fixed polyline, bucketed on a uniform grid.
class SegmentIndex {
 public:
  SegmentIndex(std::vector<Vec2> points, bool closed);
  /// Distance from p to the polyline. Once it is known to exceed `limit` the
  /// search stops and some value above `limit` is returned.
  double distance(const Vec2& p, double limit = std::numeric_limits<double>::infinity()) const;
  std::size_t segment_count() const { return segments_; }

 private:
  std::pair<int, int> cell_of(const Vec2& p) const;
  std::vector<Vec2> points_;
  std::size_t segments_ = 0;
  Vec2 origin_;
  double cell_ = 1.0;
  int nx_ = 1, ny_ = 1;
  std::vector<std::vector<int>> cells_;
};

/// Symmetric Hausdorff distance between two polylines, measured at vertices and
/// edge midpoints against the other polyline's segments.
double hausdorff(const std::vector<Vec2>& a, bool a_closed, const std::vector<Vec2>& b, bool b_closed);

struct SegmentCrossing {
  int i = 0, j = 0;  // segment indices, i < j
  double s = 0.0, t = 0.0;  // positions along the two segments in [0, 1)
  Vec2 point;
};

/// All crossings between non-adjacent segments of a polyline. Segment k joins
/// points k and k+1 (wrapping when closed). Parameters are half-open so a
/// crossing through a shared vertex is reported once. Throws NumericalError on
/// collinear overlapping segments.
std::vector<SegmentCrossing> polyline_self_crossings(const std::vector<Vec2>& points, bool closed,
                                                     double tol = 1e-12);

}  // namespace aniso
