#include "aniso/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aniso/errors.hpp"
#include "aniso/frontier.hpp"
#include "aniso/geometry.hpp"

namespace aniso {

namespace {

Vec2 as_vec2(const VecN& v) { return {v[0], v[1]}; }

VecN as_vecn(const Vec2& v) {
  VecN out(2);
  out << v.x(), v.y();
  return out;
}

Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

void check_closure(const Integrand& gamma, const ArcSpec& spec) {
  const std::size_t m = spec.arcs.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Arc& a = spec.arcs[i];
    const Arc& b = spec.arcs[(i + 1) % m];
    const Vec2 gap = frontier_point(gamma, b.from) - frontier_point(gamma, a.to);
    if (gap.norm() > kTolClosure) {
      std::ostringstream os;
      os.precision(17);
      os << "arcs do not close: end of arc " << i << " and start of arc " << (i + 1) % m << " differ by ("
         << gap.x() << ", " << gap.y() << ")";
      throw ValidationError(os.str());
    }
  }
}

ClosedCurve build(const Integrand& gamma, const ArcSpec& spec, int resolution, int window) {
  const SingularSet sing = singular_set(gamma);
  ClosedCurve c;
  c.spec = spec;
  c.window = window;
  const int min_count = 2 * window + 17;
  for (std::size_t ai = 0; ai < spec.arcs.size(); ++ai) {
    const Arc& arc = spec.arcs[ai];
    const int d = arc.direction();
    const double lo = std::min(arc.from, arc.to), hi = std::max(arc.from, arc.to);
    std::vector<double> cuts = singular_parameters_in(sing, lo, hi);
    if (d < 0) std::reverse(cuts.begin(), cuts.end());
    std::vector<double> ends{arc.from};
    ends.insert(ends.end(), cuts.begin(), cuts.end());
    ends.push_back(arc.to);
    for (std::size_t p = 0; p + 1 < ends.size(); ++p) {
      CurvePiece piece;
      piece.arc = {ends[p], ends[p + 1]};
      piece.arc_index = static_cast<int>(ai);
      const double mid = 0.5 * (ends[p] + ends[p + 1]);
      const double det = gamma.operator_A(Direction::from_angle(mid)).determinant;
      piece.detA_sign = det > 0.0 ? 1 : -1;
      piece.outward_sign = d * piece.detA_sign;
      piece.first = static_cast<int>(c.points.size());
      piece.count = std::max(
          min_count, static_cast<int>(std::lround(resolution * piece.arc.length() / arc.length())));
      const int pid = static_cast<int>(c.pieces.size());
      for (int k = 0; k < piece.count; ++k) {
        const double t = piece.arc.from + (piece.arc.to - piece.arc.from) * k / piece.count;
        const Vec2 nu = unit(t);
        const Vec2 outward = piece.outward_sign * nu;
        c.params.push_back(t);
        c.points.push_back(frontier_point(gamma, t));
        c.normal.push_back(outward);
        c.xi.push_back(as_vec2(gamma.extension_gradient_at(as_vecn(outward))));
        c.piece.push_back(pid);
      }
      c.pieces.push_back(piece);
    }
  }
  const std::size_t np = c.pieces.size();
  for (std::size_t p = 0; p < np; ++p) {
    const CurvePiece& a = c.pieces[p];
    const CurvePiece& b = c.pieces[(p + 1) % np];
    const Vec2 xa = as_vec2(gamma.extension_gradient_at(as_vecn(a.outward_sign * unit(a.arc.to))));
    const Vec2 xb = as_vec2(gamma.extension_gradient_at(as_vecn(b.outward_sign * unit(b.arc.from))));
    c.max_junction_jump = std::max(c.max_junction_jump, (xa - xb).norm());
  }
  c.signed_area = signed_area(c.points);
  return c;
}

}  // namespace

CurvatureField anisotropic_curvature_along(const ClosedCurve& curve, int window) {
  const std::size_t m = curve.size();
  if (m < 3) throw ValidationError("curve has fewer than three points");
  CurvatureField f;
  f.lambda.assign(m, 0.0);
  f.excluded.assign(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t prev = (i + m - 1) % m, next = (i + 1) % m;
    const Vec2 back = curve.points[i] - curve.points[prev];
    const Vec2 fwd = curve.points[next] - curve.points[i];
    if (back.norm() == 0.0 || fwd.norm() == 0.0)
      throw NumericalError("zero-length segment at curve point " + std::to_string(i));
    const Vec2 chord = curve.points[next] - curve.points[prev];
    const double ds = chord.norm();
    if (ds == 0.0) throw NumericalError("degenerate tangent at curve point " + std::to_string(i));
    f.lambda[i] = -(curve.xi[next] - curve.xi[prev]).dot(chord) / (ds * ds);
  }
  for (const auto& p : curve.pieces) {
    for (int k = 0; k < p.count; ++k)
      if (k <= window || k >= p.count - window) f.excluded[p.first + k] = true;
  }
  return f;
}

ClosedCurve stitch(const Integrand& gamma, const ArcSpec& arcs, int resolution, const StitchOptions& options) {
  if (gamma.n() != 1) throw DimensionMismatch(1, gamma.n());
  if (resolution < 64) throw ValidationError("stitch: resolution per arc must be >= 64");
  if (arcs.arcs.empty()) throw ValidationError("stitch: no arcs given");
  for (const auto& a : arcs.arcs)
    if (!(a.length() > 0.0)) throw ValidationError("stitch: zero-length arc");
  check_closure(gamma, arcs);

  ClosedCurve c = build(gamma, arcs, resolution, options.window);
  if (options.normalize_orientation && c.signed_area < 0.0) {
    ArcSpec rev;
    rev.name = arcs.name;
    for (auto it = arcs.arcs.rbegin(); it != arcs.arcs.rend(); ++it) rev.arcs.push_back(it->reversed());
    c = build(gamma, rev, resolution, options.window);
  }
  try {
    c.embedded = polyline_self_crossings(c.points, true).empty();
  } catch (const NumericalError&) {
    c.embedded = false;  // overlapping segments
  }
  CurvatureField f = anisotropic_curvature_along(c, options.window);
  c.lambda = std::move(f.lambda);
  c.excluded = std::move(f.excluded);
  return c;
}

ClosedCurve ClosedCurve::scaled(double r) const {
  if (!(r > 0.0)) throw ValidationError("scale factor must be positive");
  ClosedCurve c = *this;
  for (auto& p : c.points) p *= r;
  c.signed_area *= r * r;
  CurvatureField f = anisotropic_curvature_along(c, window);
  c.lambda = std::move(f.lambda);
  c.excluded = std::move(f.excluded);
  return c;
}

CamcVerdict classify(const ClosedCurve& curve, double tol_camc) {
  if (curve.lambda.size() != curve.size()) throw ValidationError("classify: curvature not computed");
  CamcVerdict v;
  v.tolerance = tol_camc;
  v.max_junction_jump = curve.max_junction_jump;
  double sum = 0.0;
  long long n = 0;
  for (const auto& p : curve.pieces) {
    PieceProfile pr;
    pr.arc = p.arc;
    pr.min = std::numeric_limits<double>::infinity();
    pr.max = -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (int k = 0; k < p.count; ++k) {
      const int i = p.first + k;
      if (curve.excluded[i]) continue;
      ++pr.samples;
      s += curve.lambda[i];
      pr.min = std::min(pr.min, curve.lambda[i]);
      pr.max = std::max(pr.max, curve.lambda[i]);
    }
    if (pr.samples < 16)
      throw ValidationError("classify: fewer than 16 usable samples on a piece; increase the resolution");
    pr.mean = s / pr.samples;
    sum += s;
    n += pr.samples;
    v.profile.push_back(pr);
  }
  v.lambda = sum / static_cast<double>(n);
  for (std::size_t i = 0; i < curve.size(); ++i)
    if (!curve.excluded[i]) v.max_deviation = std::max(v.max_deviation, std::abs(curve.lambda[i] - v.lambda));
  v.camc = v.max_deviation <= tol_camc && v.max_junction_jump <= kTolJunction;
  return v;
}

ConvergenceReport classify_with_refinement(const Integrand& gamma, const ArcSpec& arcs, int resolution,
                                           double tol_camc) {
  ConvergenceReport r;
  r.coarse = classify(stitch(gamma, arcs, resolution), tol_camc);
  r.fine = classify(stitch(gamma, arcs, 2 * resolution), tol_camc);
  const double floor = 1e-10;
  if (r.coarse.max_deviation <= floor && r.fine.max_deviation <= floor) {
    r.ratio = 0.0;
    r.converged = true;
  } else {
    r.ratio = r.coarse.max_deviation / std::max(r.fine.max_deviation, std::numeric_limits<double>::min());
    r.converged = r.ratio >= 3.0;
  }
  return r;
}

double energy_of_curve(const ClosedCurve& curve, const Integrand& gamma) {
  if (gamma.n() != 1) throw DimensionMismatch(1, gamma.n());
  const std::size_t m = curve.size();
  std::vector<double> g(m);
  for (std::size_t i = 0; i < m; ++i) g[i] = gamma.homogeneous_extension(as_vecn(curve.normal[i]));
  double e = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    e += 0.5 * (g[i] + g[j]) * (curve.points[j] - curve.points[i]).norm();
  }
  return e;
}

ArcSpec chain_arcs(const Integrand& gamma, const std::vector<Arc>& intervals, const std::string& name) {
  if (intervals.empty()) throw ValidationError("chain_arcs: no intervals");
  ArcSpec spec;
  spec.name = name;
  std::vector<bool> used(intervals.size(), false);
  spec.arcs.push_back(intervals[0]);
  used[0] = true;
  const Vec2 start = frontier_point(gamma, intervals[0].from);
  Vec2 end = frontier_point(gamma, intervals[0].to);
  for (std::size_t step = 1; step < intervals.size(); ++step) {
    bool found = false;
    for (std::size_t j = 0; j < intervals.size() && !found; ++j) {
      if (used[j]) continue;
      if ((frontier_point(gamma, intervals[j].from) - end).norm() <= kTolClosure) {
        spec.arcs.push_back(intervals[j]);
      } else if ((frontier_point(gamma, intervals[j].to) - end).norm() <= kTolClosure) {
        spec.arcs.push_back(intervals[j].reversed());
      } else {
        continue;
      }
      used[j] = true;
      found = true;
      end = frontier_point(gamma, spec.arcs.back().to);
    }
    if (!found) {
      std::ostringstream os;
      os.precision(17);
      os << "chain_arcs: no interval continues from (" << end.x() << ", " << end.y() << ")";
      throw ValidationError(os.str());
    }
  }
  if ((end - start).norm() > kTolClosure) throw ValidationError("chain_arcs: intervals do not close up");
  return spec;
}

}  // namespace aniso
