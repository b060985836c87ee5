#include "aniso/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "aniso/errors.hpp"
#include "aniso/frontier.hpp"
#include "aniso/geometry.hpp"

namespace aniso {

namespace {

double one_sided(const std::vector<Vec2>& from, const SegmentIndex& to, double stop_above) {
  double d = 0.0;
  for (const auto& p : from) {
    d = std::max(d, to.distance(p, stop_above));
    if (d > stop_above) break;
  }
  return d;
}

Vec2 arclength_centroid(const std::vector<Vec2>& pts) {
  Vec2 c = Vec2::Zero();
  double len = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Vec2& a = pts[k];
    const Vec2& b = pts[(k + 1) % pts.size()];
    const double l = (b - a).norm();
    c += l * 0.5 * (a + b);
    len += l;
  }
  return c / len;
}

Eigen::Matrix2d rotation(double phi) {
  Eigen::Matrix2d r;
  r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return r;
}

std::vector<Vec2> apply(const std::vector<Vec2>& pts, const Eigen::Matrix2d& m, const Vec2& shift_before,
                        const Vec2& shift_after) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(m * (p - shift_before) + shift_after);
  return out;
}

// Concatenate consecutive cycle arcs that continue each other in parameter.
std::vector<Arc> merge_contiguous(std::vector<Arc> arcs) {
  auto continues = [](const Arc& a, const Arc& b, double& shift) {
    if (a.direction() != b.direction()) return false;
    const double d = a.to - b.from;
    shift = std::round(d / kTwoPi) * kTwoPi;
    return std::abs(d - shift) <= 1e-12;
  };
  std::vector<Arc> out;
  for (const auto& a : arcs) {
    double shift = 0.0;
    if (!out.empty() && continues(out.back(), a, shift)) {
      out.back().to = a.to + shift;
    } else {
      out.push_back(a);
    }
  }
  double shift = 0.0;
  while (out.size() > 1 && continues(out.back(), out.front(), shift)) {
    out.back().to = out.front().to + shift;
    out.erase(out.begin());
  }
  return out;
}

}  // namespace

FrontierGraph frontier_graph(const Integrand& gamma, int frontier_resolution) {
  if (gamma.n() != 1) throw DimensionMismatch(1, gamma.n());
  const SingularSet sing = singular_set(gamma);
  const SelfIntersections si = self_intersections(gamma, sample_frontier(gamma, frontier_resolution));
  FrontierGraph g;
  for (const auto& r : sing.roots) g.breakpoints.push_back(wrap_angle(r.theta));
  for (const auto& c : si.crossings) {
    g.breakpoints.push_back(wrap_angle(c.theta_a));
    g.breakpoints.push_back(wrap_angle(c.theta_b));
  }
  std::sort(g.breakpoints.begin(), g.breakpoints.end());
  g.breakpoints.erase(std::unique(g.breakpoints.begin(), g.breakpoints.end(),
                                  [](double x, double y) { return y - x <= 1e-12; }),
                      g.breakpoints.end());
  std::vector<int> node_of;
  for (double b : g.breakpoints) {
    const Vec2 p = frontier_point(gamma, b);
    int id = -1;
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
      if ((g.nodes[k] - p).norm() <= 1e-8) id = static_cast<int>(k);
    if (id < 0) {
      id = static_cast<int>(g.nodes.size());
      g.nodes.push_back(p);
    }
    node_of.push_back(id);
  }
  const std::size_t m = g.breakpoints.size();
  for (std::size_t k = 0; k < m; ++k) {
    FrontierGraph::Edge e;
    e.a = node_of[k];
    e.b = node_of[(k + 1) % m];
    e.from = g.breakpoints[k];
    e.to = k + 1 < m ? g.breakpoints[k + 1] : g.breakpoints[0] + kTwoPi;
    g.edges.push_back(e);
  }
  return g;
}

ShapeSamples shape_samples(const Integrand& gamma, const ClosedCurve& curve, int dense_per_arc) {
  ShapeSamples s;
  s.sample = curve.points;
  s.dense = sample_arcs(gamma, curve.spec, dense_per_arc);
  s.area = std::abs(signed_area(s.dense));
  for (std::size_t k = 0; k < s.dense.size(); ++k) s.perimeter += (s.dense[(k + 1) % s.dense.size()] - s.dense[k]).norm();
  return s;
}

ShapeSamples transformed(const ShapeSamples& s, const Eigen::Matrix2d& m) {
  ShapeSamples t = s;
  t.sample = apply(s.sample, m, Vec2::Zero(), Vec2::Zero());
  t.dense = apply(s.dense, m, Vec2::Zero(), Vec2::Zero());
  return t;
}

std::vector<Eigen::Matrix2d> square_symmetries() {
  std::vector<Eigen::Matrix2d> out;
  Eigen::Matrix2d flip;
  flip << 1, 0, 0, -1;
  for (int k = 0; k < 4; ++k) {
    out.push_back(rotation(k * kPi / 2));
    out.push_back(rotation(k * kPi / 2) * flip);
  }
  return out;
}

bool congruent(const ShapeSamples& a, const ShapeSamples& b, double tol) {
  auto close = [](double x, double y) { return std::abs(x - y) <= 1e-5 * std::max(1.0, std::abs(y)); };
  if (!close(a.area, b.area) || !close(a.perimeter, b.perimeter)) return false;
  const SegmentIndex ib(b.dense, true);
  const SegmentIndex ia(a.dense, true);
  auto matches = [&](const Eigen::Matrix2d& m, const Vec2& ca, const Vec2& cb) {
    if (one_sided(apply(a.sample, m, ca, cb), ib, tol) > tol) return false;
    // b back onto a: x = m^T (y - cb) + ca.
    return one_sided(apply(b.sample, m.transpose(), cb, ca), ia, tol) <= tol;
  };
  for (const auto& m : square_symmetries())
    if (matches(m, Vec2::Zero(), Vec2::Zero())) return true;

  // General rigid motion: align arclength centroids, then search the angle.
  const Vec2 ca = arclength_centroid(a.dense), cb = arclength_centroid(b.dense);
  std::vector<Vec2> probe;
  const std::size_t stride = std::max<std::size_t>(1, a.sample.size() / 128);
  for (std::size_t k = 0; k < a.sample.size(); k += stride) probe.push_back(a.sample[k]);
  const double cap = 0.05 * std::sqrt(b.area + 1e-300) + 0.01 * b.perimeter;
  Eigen::Matrix2d flip;
  flip << 1, 0, 0, -1;
  for (const Eigen::Matrix2d& reflect : {Eigen::Matrix2d(Eigen::Matrix2d::Identity()), flip}) {
    // Scores above `cap` are clipped; only near-alignments matter.
    auto score = [&](double phi) {
      return std::min(cap, one_sided(apply(probe, rotation(phi) * reflect, ca, cb), ib, cap));
    };
    const int coarse = 720;
    std::vector<std::pair<double, double>> best;
    for (int k = 0; k < coarse; ++k) {
      const double phi = kTwoPi * k / coarse;
      best.emplace_back(score(phi), phi);
    }
    std::sort(best.begin(), best.end());
    for (int c = 0; c < 3 && best[c].first < cap; ++c) {
      double lo = best[c].second - kTwoPi / coarse, hi = best[c].second + kTwoPi / coarse;
      const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
      double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
      double f1 = score(x1), f2 = score(x2);
      for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
        if (f1 < f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - gr * (hi - lo);
          f1 = score(x1);
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + gr * (hi - lo);
          f2 = score(x2);
        }
      }
      if (matches(rotation(0.5 * (lo + hi)) * reflect, ca, cb)) return true;
    }
  }
  return false;
}

std::vector<int> congruence_classes(const std::vector<ShapeSamples>& shapes, double tol) {
  std::vector<int> ids(shapes.size(), -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (congruent(shapes[i], shapes[reps[c]], tol)) {
        ids[i] = static_cast<int>(c);
        break;
      }
    if (ids[i] < 0) {
      ids[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  return ids;
}

EnumerationResult enumerate_closed_camc(const Integrand& gamma, const EnumerationOptions& options) {
  EnumerationResult res;
  res.graph = frontier_graph(gamma, options.frontier_resolution);
  const FrontierGraph& g = res.graph;

  // Each cycle is a list of (edge, forward?) steps.
  std::vector<std::vector<std::pair<int, bool>>> cycles;
  if (g.edges.empty()) {
    cycles.push_back({});
  } else {
    std::set<std::vector<int>> seen;
    const int nn = static_cast<int>(g.nodes.size());
    std::vector<std::vector<std::pair<int, bool>>> incident(nn);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      incident[g.edges[e].a].emplace_back(static_cast<int>(e), true);
      if (g.edges[e].b != g.edges[e].a) incident[g.edges[e].b].emplace_back(static_cast<int>(e), false);
    }
    std::vector<std::pair<int, bool>> path;
    std::vector<bool> on_path(nn, false), edge_used(g.edges.size(), false);
    for (int s = 0; s < nn; ++s) {
      auto dfs = [&](auto&& self, int u) -> void {
        for (const auto& [e, fwd] : incident[u]) {
          if (edge_used[e]) continue;
          const int v = fwd ? g.edges[e].b : g.edges[e].a;
          if (v < s) continue;
          if (++res.partial_paths > options.cap)
            throw ResourceCapError("cycle enumeration exceeded the cap of " + std::to_string(options.cap) +
                                       " partial paths",
                                   options.cap);
          path.emplace_back(e, fwd);
          edge_used[e] = true;
          if (v == s) {
            std::vector<int> key;
            for (const auto& st : path) key.push_back(st.first);
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) cycles.push_back(path);
          } else if (!on_path[v]) {
            on_path[v] = true;
            self(self, v);
            on_path[v] = false;
          }
          edge_used[e] = false;
          path.pop_back();
        }
      };
      on_path[s] = true;
      dfs(dfs, s);
      on_path[s] = false;
    }
  }
  res.simple_cycles = static_cast<long long>(cycles.size());

  for (const auto& cyc : cycles) {
    ArcSpec spec;
    if (cyc.empty()) {
      spec.arcs.push_back({0.0, kTwoPi});
    } else {
      std::vector<Arc> arcs;
      for (const auto& [e, fwd] : cyc) {
        const auto& ed = g.edges[e];
        arcs.push_back(fwd ? Arc{ed.from, ed.to} : Arc{ed.to, ed.from});
      }
      spec.arcs = merge_contiguous(arcs);
    }
    EnumeratedCurve ec;
    ec.curve = stitch(gamma, spec, options.resolution);
    ec.verdict = classify(ec.curve, options.tol_camc);
    if (!ec.verdict.camc) continue;
    ec.spec = ec.curve.spec;
    ec.spec.name = "cycle" + std::to_string(res.curves.size());
    ec.shape = shape_samples(gamma, ec.curve, options.dense_per_arc);
    res.curves.push_back(std::move(ec));
  }

  std::vector<ShapeSamples> shapes;
  for (const auto& c : res.curves) shapes.push_back(c.shape);
  const std::vector<int> ids = congruence_classes(shapes, options.match_tol);
  for (std::size_t i = 0; i < res.curves.size(); ++i) {
    res.curves[i].class_id = ids[i];
    if (ids[i] == static_cast<int>(res.classes.size())) {
      CongruenceClass c;
      c.id = ids[i];
      c.representative = static_cast<int>(i);
      c.lambda = res.curves[i].verdict.lambda;
      c.area = res.curves[i].shape.area;
      c.perimeter = res.curves[i].shape.perimeter;
      c.embedded = res.curves[i].curve.embedded;
      res.classes.push_back(c);
    }
    ++res.classes[ids[i]].members;
  }
  return res;
}

int find_class(const EnumerationResult& result, const ShapeSamples& shape, double tol) {
  for (const auto& c : result.classes)
    if (congruent(shape, result.curves[c.representative].shape, tol)) return c.id;
  return -1;
}

}  // namespace aniso
