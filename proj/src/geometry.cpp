#include "aniso/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <array>
#include <tuple>

#include "aniso/errors.hpp"

namespace aniso {

double signed_area(const std::vector<Vec2>& polygon) {
  double a = 0.0;
  const std::size_t m = polygon.size();
  for (std::size_t k = 0; k < m; ++k) a += cross2(polygon[k], polygon[(k + 1) % m]);
  return 0.5 * a;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double u = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
  return (p - (a + u * d)).norm();
}

bool line_intersection(const Vec2& p0, const Vec2& d0, const Vec2& p1, const Vec2& d1, double& s, double& t,
                       double tol) {
  const double den = cross2(d0, d1);
  if (std::abs(den) <= tol * d0.norm() * d1.norm()) return false;
  const Vec2 w = p1 - p0;
  s = cross2(w, d1) / den;
  t = cross2(w, d0) / den;
  return true;
}

namespace {

struct Grid {
  Vec2 origin;
  double cell = 1.0;
  int nx = 1, ny = 1;
};

Grid make_grid(const std::vector<Vec2>& points, std::size_t segments) {
  Grid g;
  Vec2 lo = points.front(), hi = points.front();
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double w = std::max(hi.x() - lo.x(), 1e-12), h = std::max(hi.y() - lo.y(), 1e-12);
  const double target = std::max<double>(1.0, static_cast<double>(segments));
  g.cell = std::max(std::sqrt(w * h / target), std::max(w, h) / 4096.0);
  g.origin = lo;
  g.nx = std::max(1, static_cast<int>(std::ceil(w / g.cell)));
  g.ny = std::max(1, static_cast<int>(std::ceil(h / g.cell)));
  return g;
}

template <class F>
void for_cells(const Grid& g, const Vec2& a, const Vec2& b, F&& f) {
  auto clampi = [](int v, int n) { return std::clamp(v, 0, n - 1); };
  const int x0 = clampi(static_cast<int>(std::floor((std::min(a.x(), b.x()) - g.origin.x()) / g.cell)), g.nx);
  const int x1 = clampi(static_cast<int>(std::floor((std::max(a.x(), b.x()) - g.origin.x()) / g.cell)), g.nx);
  const int y0 = clampi(static_cast<int>(std::floor((std::min(a.y(), b.y()) - g.origin.y()) / g.cell)), g.ny);
  const int y1 = clampi(static_cast<int>(std::floor((std::max(a.y(), b.y()) - g.origin.y()) / g.cell)), g.ny);
  for (int x = x0; x <= x1; ++x)
    for (int y = y0; y <= y1; ++y) f(x * g.ny + y);
}

}  // namespace

SegmentIndex::SegmentIndex(std::vector<Vec2> points, bool closed) : points_(std::move(points)) {
  if (points_.size() < 2) throw ValidationError("polyline needs at least two points");
  segments_ = closed ? points_.size() : points_.size() - 1;
  const Grid g = make_grid(points_, segments_);
  origin_ = g.origin;
  cell_ = g.cell;
  nx_ = g.nx;
  ny_ = g.ny;
  cells_.assign(static_cast<std::size_t>(nx_) * ny_, {});
  for (std::size_t k = 0; k < segments_; ++k)
    for_cells(g, points_[k], points_[(k + 1) % points_.size()],
              [&](int c) { cells_[c].push_back(static_cast<int>(k)); });
}

std::pair<int, int> SegmentIndex::cell_of(const Vec2& p) const {
  const int x = std::clamp(static_cast<int>(std::floor((p.x() - origin_.x()) / cell_)), 0, nx_ - 1);
  const int y = std::clamp(static_cast<int>(std::floor((p.y() - origin_.y()) / cell_)), 0, ny_ - 1);
  return {x, y};
}

double SegmentIndex::distance(const Vec2& p, double limit) const {
  const auto [cx, cy] = cell_of(p);
  // Distance from p to the clamped cell block; rings beyond it are at least
  // this far plus the ring offset.
  const double ox = std::max({0.0, origin_.x() - p.x(), p.x() - (origin_.x() + nx_ * cell_)});
  const double oy = std::max({0.0, origin_.y() - p.y(), p.y() - (origin_.y() + ny_ * cell_)});
  const double outside = std::hypot(ox, oy);
  double best = std::numeric_limits<double>::infinity();
  const int max_ring = std::max(nx_, ny_);
  for (int r = 0; r <= max_ring; ++r) {
    for (int x = cx - r; x <= cx + r; ++x) {
      if (x < 0 || x >= nx_) continue;
      for (int y = cy - r; y <= cy + r; ++y) {
        if (y < 0 || y >= ny_) continue;
        if (std::max(std::abs(x - cx), std::abs(y - cy)) != r) continue;
        for (int k : cells_[static_cast<std::size_t>(x) * ny_ + y])
          best = std::min(best, point_segment_distance(p, points_[k], points_[(k + 1) % points_.size()]));
      }
    }
    if (best <= outside + r * cell_) break;
    if (outside + r * cell_ > limit) return std::max(best, std::nextafter(limit, std::numeric_limits<double>::infinity()));
  }
  return best;
}

double hausdorff(const std::vector<Vec2>& a, bool a_closed, const std::vector<Vec2>& b, bool b_closed) {
  auto one_sided = [](const std::vector<Vec2>& from, bool from_closed, const SegmentIndex& to) {
    double d = 0.0;
    const std::size_t m = from.size();
    const std::size_t segs = from_closed ? m : m - 1;
    for (std::size_t k = 0; k < m; ++k) d = std::max(d, to.distance(from[k]));
    for (std::size_t k = 0; k < segs; ++k) d = std::max(d, to.distance(0.5 * (from[k] + from[(k + 1) % m])));
    return d;
  };
  const SegmentIndex ia(a, a_closed), ib(b, b_closed);
  return std::max(one_sided(a, a_closed, ib), one_sided(b, b_closed, ia));
}

std::vector<SegmentCrossing> polyline_self_crossings(const std::vector<Vec2>& points, bool closed, double tol) {
  const std::size_t m = points.size();
  if (m < 4) return {};
  const std::size_t segs = closed ? m : m - 1;
  const Grid g = make_grid(points, segs);
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(g.nx) * g.ny);
  for (std::size_t k = 0; k < segs; ++k)
    for_cells(g, points[k], points[(k + 1) % m], [&](int c) { cells[c].push_back(static_cast<int>(k)); });

  // Cell range of every segment; a pair is tested only in the lowest cell
  // shared by both ranges, so each pair is examined once.
  std::vector<std::array<int, 4>> range(segs);
  for (std::size_t k = 0; k < segs; ++k) {
    int x0 = g.nx, y0 = g.ny, x1 = -1, y1 = -1;
    for_cells(g, points[k], points[(k + 1) % m], [&](int c) {
      x0 = std::min(x0, c / g.ny);
      x1 = std::max(x1, c / g.ny);
      y0 = std::min(y0, c % g.ny);
      y1 = std::max(y1, c % g.ny);
    });
    range[k] = {x0, y0, x1, y1};
  }
  std::vector<SegmentCrossing> out;
  auto adjacent = [&](int i, int j) {
    const int d = std::abs(i - j);
    return d <= 1 || (closed && d == static_cast<int>(segs) - 1);
  };
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const auto& cell = cells[ci];
    const int cx = static_cast<int>(ci) / g.ny, cy = static_cast<int>(ci) % g.ny;
    for (std::size_t u = 0; u < cell.size(); ++u) {
      for (std::size_t v = u + 1; v < cell.size(); ++v) {
        int i = cell[u], j = cell[v];
        if (i > j) std::swap(i, j);
        if (adjacent(i, j)) continue;
        if (std::max(range[i][0], range[j][0]) != cx || std::max(range[i][1], range[j][1]) != cy) continue;
        const Vec2 &a0 = points[i], &a1 = points[(i + 1) % m];
        const Vec2 &b0 = points[j], &b1 = points[(j + 1) % m];
        const Vec2 da = a1 - a0, db = b1 - b0;
        double s = 0.0, t = 0.0;
        if (!line_intersection(a0, da, b0, db, s, t, tol)) {
          // Parallel: overlapping only if collinear with overlapping projections.
          const double len = da.norm();
          if (len == 0.0) throw NumericalError("zero-length segment in polyline");
          const double off = std::abs(cross2(da, b0 - a0)) / len;
          if (off > tol * std::max(1.0, len)) continue;
          const double p0 = da.dot(b0 - a0) / (len * len), p1 = da.dot(b1 - a0) / (len * len);
          if (std::max(p0, p1) > tol && std::min(p0, p1) < 1.0 - tol)
            throw NumericalError("collinear overlapping segments " + std::to_string(i) + " and " +
                                 std::to_string(j) + "; increase the sampling resolution");
          continue;
        }
        if (s >= 0.0 && s < 1.0 && t >= 0.0 && t < 1.0) out.push_back({i, j, s, t, a0 + s * da});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });
  return out;
}

}  // namespace aniso
