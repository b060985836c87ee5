#include "aniso/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aniso/errors.hpp"
#include "aniso/geometry.hpp"

namespace aniso {

namespace {

void require_n1(const Integrand& gamma) {
  if (gamma.n() != 1) throw DimensionMismatch(1, gamma.n());
}

double det_A(const Integrand& gamma, double theta) {
  return gamma.operator_A(Direction::from_angle(theta)).determinant;
}

int sign_of(double d, double tol) { return d > tol ? 1 : (d < -tol ? -1 : 0); }

double bisect_root(const Integrand& gamma, double lo, double hi) {
  double flo = det_A(gamma, lo);
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    const double fm = det_A(gamma, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Refined {
  double a = 0.0, b = 0.0;
  Vec2 point;
  double gap = 0.0;
};

// Shrink a parameter window on each of the two arcs around the intersection of
// their chords until the windows are at rounding level.
Refined refine_crossing(const Integrand& gamma, double a0, double a1, double b0, double b1) {
  Refined r;
  r.a = 0.5 * (a0 + a1);
  r.b = 0.5 * (b0 + b1);
  for (int it = 0; it < 200; ++it) {
    const Vec2 p0 = frontier_point(gamma, a0), p1 = frontier_point(gamma, a1);
    const Vec2 q0 = frontier_point(gamma, b0), q1 = frontier_point(gamma, b1);
    double s = 0.0, t = 0.0;
    if (!line_intersection(p0, p1 - p0, q0, q1 - q0, s, t, 1e-15)) break;
    r.a = a0 + s * (a1 - a0);
    r.b = b0 + t * (b1 - b0);
    const double wa = 0.25 * (a1 - a0), wb = 0.25 * (b1 - b0);
    if (std::abs(a1 - a0) < 1e-14 && std::abs(b1 - b0) < 1e-14) break;
    a0 = r.a - wa;
    a1 = r.a + wa;
    b0 = r.b - wb;
    b1 = r.b + wb;
  }
  const Vec2 pa = frontier_point(gamma, r.a), pb = frontier_point(gamma, r.b);
  r.point = 0.5 * (pa + pb);
  r.gap = (pa - pb).norm();
  return r;
}

bool same_angle(double x, double y, double tol) {
  const double d = std::abs(wrap_angle(x) - wrap_angle(y));
  return d <= tol || kTwoPi - d <= tol;
}

}  // namespace

FrontierSample frontier_sample(const Integrand& gamma, const Direction& nu, double tol_sing) {
  FrontierSample s;
  s.nu = nu;
  s.theta = nu.theta();
  if (nu.n() == 2) s.rho = nu.rho();
  s.xi = gamma.extension_gradient(nu);
  s.A = gamma.operator_A(nu);
  s.detA_sign = sign_of(s.A.determinant, tol_sing);
  return s;
}

Vec2 frontier_point(const Integrand& gamma, double theta) {
  require_n1(gamma);
  const VecN xi = gamma.extension_gradient(Direction::from_angle(theta));
  return {xi[0], xi[1]};
}

std::vector<FrontierSample> sample_frontier(const Integrand& gamma, int resolution, double tol_sing) {
  if (resolution < 16) throw ValidationError("sample_frontier: resolution must be >= 16");
  std::vector<FrontierSample> out;
  if (gamma.n() == 1) {
    out.reserve(resolution);
    for (int k = 0; k < resolution; ++k) {
      const double theta = kTwoPi * k / resolution;
      FrontierSample s = frontier_sample(gamma, Direction::from_angle(theta), tol_sing);
      s.theta = theta;
      out.push_back(std::move(s));
    }
    return out;
  }
  const int cols = 2 * resolution;
  out.reserve(static_cast<std::size_t>(resolution) * cols);
  for (int i = 0; i < resolution; ++i) {
    const double theta = -kPi / 2 + kPi * i / (resolution - 1);
    for (int j = 0; j < cols; ++j) {
      const double rho = kTwoPi * j / cols;
      FrontierSample s = frontier_sample(gamma, Direction::from_angles(theta, rho), tol_sing);
      s.theta = theta;
      s.rho = rho;
      out.push_back(std::move(s));
    }
  }
  return out;
}

SingularSet singular_set(const Integrand& gamma, double tol_sing, int grid) {
  require_n1(gamma);
  if (grid < 16) throw ValidationError("singular_set: grid must be >= 16");
  std::vector<double> theta(grid), det(grid);
  std::vector<int> sg(grid);
  for (int k = 0; k < grid; ++k) {
    theta[k] = kTwoPi * k / grid;
    det[k] = det_A(gamma, theta[k]);
    sg[k] = sign_of(det[k], tol_sing);
  }
  int start = -1;
  for (int k = 0; k < grid; ++k)
    if (sg[k] != 0) {
      start = k;
      break;
    }
  if (start < 0) throw NumericalError("det A vanishes on the whole sampling grid");

  SingularSet out;
  // Walk the grid cyclically from a sample with a definite sign.
  int k = start;
  for (int step = 0; step < grid;) {
    const int next = (k + 1) % grid;
    if (sg[next] != 0) {
      if (sg[next] != sg[k]) {
        const double lo = theta[k];
        const double hi = next == 0 ? kTwoPi : theta[next];
        out.roots.push_back({wrap_angle(bisect_root(gamma, lo, hi)), {}, false});
      }
      k = next;
      ++step;
      continue;
    }
    // A run of grid points where |det A| <= tol_sing.
    int run_end = next, len = 1;
    while (sg[(run_end + 1) % grid] == 0) {
      run_end = (run_end + 1) % grid;
      ++len;
    }
    const int after = (run_end + 1) % grid;
    const double lo = theta[k];
    double hi = theta[after];
    if (hi <= lo) hi += kTwoPi;
    if (sg[after] != sg[k]) {
      out.roots.push_back({wrap_angle(bisect_root(gamma, lo, hi)), {}, false});
    } else {
      const double mid = theta[k] + (kTwoPi / grid) * (0.5 * (len + 1));
      out.roots.push_back({wrap_angle(mid), {}, true});
    }
    step += len + 1;
    k = after;
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& x, const auto& y) { return x.theta < y.theta; });
  for (auto& r : out.roots) r.image = frontier_point(gamma, r.theta);
  for (std::size_t i = 0; i < out.roots.size(); ++i)
    for (std::size_t j = i + 1; j < out.roots.size(); ++j)
      if ((out.roots[i].image - out.roots[j].image).norm() <= 1e-9)
        out.identifications.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

std::vector<double> singular_parameters_in(const SingularSet& singular, double lo, double hi) {
  std::vector<double> out;
  for (const auto& r : singular.roots) {
    double t = r.theta + std::floor((lo - r.theta) / kTwoPi) * kTwoPi;
    while (t <= lo + 1e-12) t += kTwoPi;
    for (; t < hi - 1e-12; t += kTwoPi) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double max_support_excess(const Integrand& gamma, const Vec2& x, int directions) {
  require_n1(gamma);
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < directions; ++k) {
    const double t = kTwoPi * k / directions;
    worst = std::max(worst, x.x() * std::cos(t) + x.y() * std::sin(t) - gamma.evaluate(Direction::from_angle(t)));
  }
  return worst;
}

SelfIntersections self_intersections(const Integrand& gamma, const std::vector<FrontierSample>& samples) {
  require_n1(gamma);
  if (samples.size() < 256) throw ValidationError("self_intersections: need at least 256 frontier samples");
  const std::size_t m = samples.size();
  std::vector<Vec2> pts(m);
  double max_seg = 0.0;
  for (std::size_t k = 0; k < m; ++k) pts[k] = {samples[k].xi[0], samples[k].xi[1]};
  for (std::size_t k = 0; k < m; ++k) max_seg = std::max(max_seg, (pts[(k + 1) % m] - pts[k]).norm());

  const SingularSet sing = singular_set(gamma);
  SelfIntersections out;
  for (const auto& [i, j] : sing.identifications) {
    Crossing c;
    c.point = 0.5 * (sing.roots[i].image + sing.roots[j].image);
    c.theta_a = sing.roots[i].theta;
    c.theta_b = sing.roots[j].theta;
    c.inner = max_support_excess(gamma, c.point) <= 1e-9;
    out.corners.push_back(c);
  }
  auto near_corner = [&](const Vec2& p, double tol) {
    for (const auto& c : out.corners)
      if ((c.point - p).norm() <= tol) return true;
    return false;
  };

  auto param_end = [&](std::size_t k) {
    const double t = samples[(k + 1) % m].theta;
    return k + 1 == m ? t + kTwoPi : t;
  };
  for (const auto& sc : polyline_self_crossings(pts, true, 1e-12)) {
    const Refined r = refine_crossing(gamma, samples[sc.i].theta, param_end(sc.i), samples[sc.j].theta,
                                      param_end(sc.j));
    if (near_corner(r.point, 1e-9)) continue;
    if (r.gap > 1e-9) {
      // Polyline crossings next to a cusp pair need not correspond to a
      // transverse crossing of the curve.
      if (near_corner(sc.point, 4.0 * max_seg)) continue;
      std::ostringstream os;
      os.precision(17);
      os << "crossing refinement did not converge near (" << sc.point.x() << ", " << sc.point.y()
         << "); increase the sampling resolution";
      throw NumericalError(os.str());
    }
    Crossing c;
    c.point = r.point;
    c.theta_a = wrap_angle(std::min(r.a, r.b) == r.a ? r.a : r.b);
    c.theta_b = wrap_angle(std::min(r.a, r.b) == r.a ? r.b : r.a);
    if (c.theta_a > c.theta_b) std::swap(c.theta_a, c.theta_b);
    bool duplicate = false;
    for (const auto& o : out.crossings)
      if (same_angle(o.theta_a, c.theta_a, 1e-9) && same_angle(o.theta_b, c.theta_b, 1e-9)) duplicate = true;
    if (duplicate) continue;
    c.inner = max_support_excess(gamma, c.point) <= 1e-9;
    out.crossings.push_back(c);
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const auto& x, const auto& y) { return x.theta_a < y.theta_a; });
  return out;
}

WulffShape wulff_halfspace(const Integrand& gamma, int resolution) {
  if (resolution < 64) throw ValidationError("wulff_halfspace: resolution must be >= 64");
  if (gamma.n() == 2) {
    WulffShape w = wulff_halfspace(gamma.meridian_profile(), resolution);
    w.n = 2;
    w.rotational = true;
    return w;
  }
  std::vector<double> g(resolution);
  double gmax = 0.0;
  for (int k = 0; k < resolution; ++k) {
    g[k] = gamma.evaluate(Direction::from_angle(kTwoPi * k / resolution));
    gmax = std::max(gmax, g[k]);
  }
  const double box = 2.0 * gmax;
  std::vector<Vec2> poly{{-box, -box}, {box, -box}, {box, box}, {-box, box}};
  for (int k = 0; k < resolution && !poly.empty(); ++k) {
    const double t = kTwoPi * k / resolution;
    const Vec2 nu(std::cos(t), std::sin(t));
    std::vector<Vec2> next;
    next.reserve(poly.size() + 1);
    for (std::size_t v = 0; v < poly.size(); ++v) {
      const Vec2& p = poly[v];
      const Vec2& q = poly[(v + 1) % poly.size()];
      const double dp = p.dot(nu) - g[k], dq = q.dot(nu) - g[k];
      if (dp <= 0.0) next.push_back(p);
      if ((dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0)) next.push_back(p + (dp / (dp - dq)) * (q - p));
    }
    poly = std::move(next);
  }
  if (poly.size() < 3) throw NumericalError("half-plane intersection has empty interior");

  // Drop repeated vertices, then merge collinear neighbours.
  bool changed = true;
  while (changed && poly.size() > 3) {
    changed = false;
    for (std::size_t v = 0; v < poly.size() && poly.size() > 3; ++v) {
      const Vec2& prev = poly[(v + poly.size() - 1) % poly.size()];
      const Vec2& cur = poly[v];
      const Vec2& nxt = poly[(v + 1) % poly.size()];
      const Vec2 e1 = cur - prev, e2 = nxt - cur;
      const bool repeated = e1.norm() <= 1e-14 * gmax;
      const bool collinear = !repeated && e2.norm() > 0.0 && std::abs(std::atan2(cross2(e1, e2), e1.dot(e2))) <= 1e-8;
      if (repeated || collinear) {
        poly.erase(poly.begin() + static_cast<long>(v));
        changed = true;
        --v;
      }
    }
  }

  WulffShape w;
  w.vertices = poly;
  const double threshold = 10.0 * kTwoPi / resolution;
  const std::size_t nv = poly.size();
  for (std::size_t v = 0; v < nv; ++v) {
    const Vec2 e1 = poly[v] - poly[(v + nv - 1) % nv];
    const Vec2 e2 = poly[(v + 1) % nv] - poly[v];
    const double turn = std::atan2(cross2(e1, e2), e1.dot(e2));
    if (turn > threshold) {
      w.corners.push_back(static_cast<int>(v));
      w.corner_normal_ranges.emplace_back(wrap_angle(std::atan2(-e1.x(), e1.y())),
                                          wrap_angle(std::atan2(-e2.x(), e2.y())));
    }
  }
  return w;
}

ArcSpec wulff_arcs(const Integrand& gamma, const SingularSet& singular, const std::vector<Crossing>& crossings) {
  require_n1(gamma);
  std::vector<double> breaks;
  for (const auto& r : singular.roots) breaks.push_back(wrap_angle(r.theta));
  for (const auto& c : crossings) {
    breaks.push_back(wrap_angle(c.theta_a));
    breaks.push_back(wrap_angle(c.theta_b));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(), [](double x, double y) { return y - x <= 1e-12; }),
               breaks.end());

  auto on_boundary = [&](double theta) {
    if (gamma.operator_A(Direction::from_angle(theta)).determinant <= 0.0) return false;
    return max_support_excess(gamma, frontier_point(gamma, theta)) <= 1e-9;
  };

  ArcSpec spec;
  spec.name = "wulff";
  if (breaks.empty()) {
    if (!on_boundary(0.0)) throw NumericalError("frontier without breakpoints is not the Wulff boundary");
    spec.arcs.push_back({0.0, kTwoPi});
    return spec;
  }
  const std::size_t m = breaks.size();
  std::vector<bool> keep(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double lo = breaks[k];
    const double hi = k + 1 < m ? breaks[k + 1] : breaks[0] + kTwoPi;
    keep[k] = on_boundary(0.5 * (lo + hi));
  }
  std::size_t first = m;
  for (std::size_t k = 0; k < m; ++k)
    if (!keep[k]) {
      first = k;
      break;
    }
  if (first == m) throw NumericalError("every frontier interval lies on the Wulff boundary despite breakpoints");
  // Merge runs of kept intervals, walking from just after a rejected one with
  // unwrapped angles.
  double prev_lo = -std::numeric_limits<double>::infinity();
  bool open = false;
  for (std::size_t step = 1; step <= m; ++step) {
    const std::size_t k = (first + step) % m;
    double lo = breaks[k];
    while (lo < prev_lo) lo += kTwoPi;
    prev_lo = lo;
    const double width = (k + 1 < m ? breaks[k + 1] : breaks[0] + kTwoPi) - breaks[k];
    if (!keep[k]) {
      open = false;
      continue;
    }
    if (open) {
      spec.arcs.back().to = lo + width;
    } else {
      spec.arcs.push_back({lo, lo + width});
      open = true;
    }
  }
  for (auto& a : spec.arcs) {
    const double shift = std::floor(a.from / kTwoPi) * kTwoPi;
    a.from -= shift;
    a.to -= shift;
  }
  std::sort(spec.arcs.begin(), spec.arcs.end(), [](const Arc& x, const Arc& y) { return x.from < y.from; });

  auto is_crossing_param = [&](double t) {
    for (const auto& c : crossings)
      if (same_angle(t, c.theta_a, 1e-9) || same_angle(t, c.theta_b, 1e-9)) return true;
    return false;
  };
  for (const auto& a : spec.arcs)
    if (!is_crossing_param(a.from) || !is_crossing_param(a.to)) {
      std::ostringstream os;
      os.precision(17);
      os << "Wulff arc [" << a.from << ", " << a.to << "] has an endpoint outside the crossing set";
      throw ValidationError(os.str());
    }
  return spec;
}

std::vector<Vec2> sample_arcs(const Integrand& gamma, const ArcSpec& spec, int per_arc) {
  if (per_arc < 2) throw ValidationError("sample_arcs: need at least two samples per arc");
  std::vector<Vec2> out;
  for (const auto& a : spec.arcs)
    for (int k = 0; k + 1 < per_arc; ++k) out.push_back(frontier_point(gamma, a.from + (a.to - a.from) * k / (per_arc - 1)));
  return out;
}

WulffComparison compare_wulff_constructions(const Integrand& gamma, int resolution) {
  const Integrand g = gamma.n() == 2 ? gamma.meridian_profile() : gamma;
  const WulffShape w = wulff_halfspace(g, resolution);
  const SingularSet sing = singular_set(g);
  const SelfIntersections si = self_intersections(g, sample_frontier(g, std::max(resolution, 256)));
  const ArcSpec arcs = wulff_arcs(g, sing, si.crossings);
  const std::vector<Vec2> pts = sample_arcs(g, arcs, resolution);
  WulffComparison c;
  c.hausdorff = hausdorff(w.vertices, true, pts, true);
  c.polygon_vertices = w.vertices.size();
  c.arc_points = pts.size();
  return c;
}

}  // namespace aniso
