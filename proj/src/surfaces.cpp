#include "aniso/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "aniso/errors.hpp"
#include "aniso/frontier.hpp"
#include "aniso/geometry.hpp"

namespace aniso {

namespace {

struct AxisPoint {
  int arc = 0;
  double t = 0.0;
};

struct PortionArc {
  Arc arc;
  double parent_length = 0.0;
};

Vec3 direction3(double t, double rho) {
  return {std::cos(t) * std::cos(rho), std::cos(t) * std::sin(rho), std::sin(t)};
}

VecN as_vecn(const Vec3& v) {
  VecN out(3);
  out << v.x(), v.y(), v.z();
  return out;
}

Vec3 as_vec3(const VecN& v) { return {v[0], v[1], v[2]}; }

// Parameters where the profile curve meets the axis x1 = 0, in traversal order.
std::vector<AxisPoint> axis_points(const Integrand& profile, const ArcSpec& spec) {
  std::vector<AxisPoint> out;
  auto fx = [&](double t) { return frontier_point(profile, t).x(); };
  const int k_samples = 512;
  for (std::size_t i = 0; i < spec.arcs.size(); ++i) {
    const Arc& a = spec.arcs[i];
    double prev_t = a.from, prev_f = fx(a.from);
    if (std::abs(prev_f) <= 1e-12) out.push_back({static_cast<int>(i), a.from});
    for (int k = 1; k < k_samples; ++k) {
      const double t = a.from + (a.to - a.from) * k / k_samples;
      const double f = fx(t);
      if (std::abs(f) <= 1e-12) {
        out.push_back({static_cast<int>(i), t});
      } else if (std::abs(prev_f) > 1e-12 && (f > 0.0) != (prev_f > 0.0)) {
        double lo = prev_t, hi = t, flo = prev_f;
        while (std::abs(hi - lo) > 1e-14) {
          const double mid = 0.5 * (lo + hi);
          const double fm = fx(mid);
          if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        out.push_back({static_cast<int>(i), 0.5 * (lo + hi)});
      }
      prev_t = t;
      prev_f = f;
    }
    // The arc end is the next arc's start; a sign change in the last step is
    // still caught here.
    const double f_end = fx(a.to);
    if (std::abs(f_end) > 1e-12 && std::abs(prev_f) > 1e-12 && (f_end > 0.0) != (prev_f > 0.0)) {
      double lo = prev_t, hi = a.to, flo = prev_f;
      while (std::abs(hi - lo) > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        const double fm = fx(mid);
        if ((fm > 0.0) == (flo > 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.push_back({static_cast<int>(i), 0.5 * (lo + hi)});
    }
  }
  return out;
}

// The part of the closed traversal from p0 to p1.
std::vector<PortionArc> portion(const ArcSpec& spec, const AxisPoint& p0, const AxisPoint& p1) {
  std::vector<PortionArc> out;
  const std::size_t m = spec.arcs.size();
  std::size_t i = static_cast<std::size_t>(p0.arc);
  double start = p0.t;
  for (std::size_t step = 0; step <= m + 1; ++step) {
    const Arc& a = spec.arcs[i];
    const double ahead = a.direction() * (p1.t - start);
    if (static_cast<int>(i) == p1.arc && (ahead > 0.0 || (step > 0 && ahead >= 0.0))) {
      out.push_back({{start, p1.t}, a.length()});
      break;
    }
    out.push_back({{start, a.to}, a.length()});
    i = (i + 1) % m;
    start = spec.arcs[i].from;
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const PortionArc& p) { return p.arc.length() < 1e-14; }),
            out.end());
  // Join pieces that continue each other modulo 2*pi; each swept arc then gets
  // its own row budget.
  std::vector<PortionArc> merged;
  for (const auto& p : out) {
    if (!merged.empty()) {
      Arc& last = merged.back().arc;
      const double d = last.to - p.arc.from;
      const double shift = std::round(d / kTwoPi) * kTwoPi;
      if (last.direction() == p.arc.direction() && std::abs(d - shift) <= 1e-12) {
        last.to = p.arc.to + shift;
        continue;
      }
    }
    merged.push_back(p);
  }
  for (auto& p : merged) p.parent_length = p.arc.length();
  return merged;
}

std::vector<Vec2> sample_portion(const Integrand& profile, const std::vector<PortionArc>& arcs, int per_arc) {
  std::vector<Vec2> pts;
  for (const auto& p : arcs)
    for (int k = 0; k <= per_arc; ++k)
      pts.push_back(frontier_point(profile, p.arc.from + (p.arc.to - p.arc.from) * k / per_arc));
  return pts;
}

}  // namespace

Integrand rotational_lift(const Integrand& profile) { return profile.rotational_lift(); }

SurfaceMesh mesh_frontier_surface(const Integrand& integrand3d, const ArcSpec& arcs, int n_theta, int n_rho) {
  if (integrand3d.n() != 2) throw DimensionMismatch(2, integrand3d.n());
  if (n_theta < 64) throw ValidationError("mesh_frontier_surface: need at least 64 rows per arc");
  if (n_rho < 128) throw ValidationError("mesh_frontier_surface: need at least 128 columns");
  const Integrand profile = integrand3d.meridian_profile();
  const ArcSpec spec = stitch(profile, arcs, 64).spec;

  const std::vector<AxisPoint> axis = axis_points(profile, spec);
  std::vector<PortionArc> sweep;
  bool cyclic = false;
  if (axis.empty()) {
    cyclic = true;
    for (const auto& a : spec.arcs) sweep.push_back({a, a.length()});
  } else if (axis.size() == 2) {
    std::vector<PortionArc> h0 = portion(spec, axis[0], axis[1]);
    std::vector<PortionArc> h1 = portion(spec, axis[1], axis[0]);
    const std::vector<Vec2> s0 = sample_portion(profile, h0, 64);
    double mean_x = 0.0;
    for (const auto& p : s0) mean_x += p.x();
    if (mean_x < 0.0) std::swap(h0, h1);
    // The swept half must be the mirror image of the other half.
    std::vector<Vec2> a = sample_portion(profile, h0, 512), b = sample_portion(profile, h1, 512);
    for (auto& p : b) p.x() = -p.x();
    if (hausdorff(a, false, b, false) > 1e-4)
      throw ValidationError("profile curve is not symmetric about the rotation axis");
    sweep = h0;
  } else {
    throw ValidationError("profile curve meets the rotation axis at " + std::to_string(axis.size()) +
                          " points; expected 0 or 2");
  }

  const SingularSet sing = singular_set(profile);
  SurfaceMesh mesh;
  mesh.cyclic_rows = cyclic;
  mesh.cols = n_rho;
  for (int j = 0; j < n_rho; ++j) mesh.rho.push_back(kTwoPi * j / n_rho);
  const int min_rows = 2 * kJunctionWindow + 17;
  for (const auto& pa : sweep) {
    const Arc& arc = pa.arc;
    const int d = arc.direction();
    std::vector<double> cuts =
        singular_parameters_in(sing, std::min(arc.from, arc.to), std::max(arc.from, arc.to));
    if (d < 0) std::reverse(cuts.begin(), cuts.end());
    std::vector<double> ends{arc.from};
    ends.insert(ends.end(), cuts.begin(), cuts.end());
    ends.push_back(arc.to);
    for (std::size_t p = 0; p + 1 < ends.size(); ++p) {
      SurfacePiece piece;
      piece.arc = {ends[p], ends[p + 1]};
      const double det = profile.operator_A(Direction::from_angle(0.5 * (ends[p] + ends[p + 1]))).determinant;
      piece.detA_sign = det > 0.0 ? 1 : -1;
      piece.outward_sign = d * piece.detA_sign;
      piece.first_row = static_cast<int>(mesh.theta.size());
      piece.rows = std::max(min_rows,
                            static_cast<int>(std::lround(n_theta * piece.arc.length() / pa.parent_length)));
      for (int k = 0; k < piece.rows; ++k) {
        mesh.theta.push_back(piece.arc.from + (piece.arc.to - piece.arc.from) * k / piece.rows);
        mesh.row_piece.push_back(static_cast<int>(mesh.pieces.size()));
      }
      mesh.pieces.push_back(piece);
    }
  }
  if (!cyclic) {
    // Closing pole row at the end of the sweep.
    mesh.theta.push_back(mesh.pieces.back().arc.to);
    mesh.row_piece.push_back(static_cast<int>(mesh.pieces.size()) - 1);
    ++mesh.pieces.back().rows;
  }
  mesh.rows = static_cast<int>(mesh.theta.size());
  mesh.pole_row.assign(mesh.rows, false);
  if (!cyclic) mesh.pole_row.front() = mesh.pole_row.back() = true;

  const std::size_t nv = static_cast<std::size_t>(mesh.rows) * mesh.cols;
  mesh.X.resize(nv);
  mesh.normal.resize(nv);
  mesh.xi.resize(nv);
  for (int i = 0; i < mesh.rows; ++i) {
    const double t = mesh.theta[i];
    const Vec2 p = frontier_point(profile, t);
    const int sigma = mesh.pieces[mesh.row_piece[i]].outward_sign;
    for (int j = 0; j < mesh.cols; ++j) {
      const double r = mesh.rho[j];
      const std::size_t v = mesh.index(i, j);
      mesh.X[v] = mesh.pole_row[i] ? Vec3(0.0, 0.0, p.y()) : Vec3(p.x() * std::cos(r), p.x() * std::sin(r), p.y());
      mesh.normal[v] = sigma * direction3(t, r);
      mesh.xi[v] = as_vec3(integrand3d.extension_gradient_at(as_vecn(mesh.normal[v])));
    }
  }
  if (!cyclic) {
    for (int i : {0, mesh.rows - 1})
      if (std::abs(frontier_point(profile, mesh.theta[i]).x()) > 1e-9)
        throw ValidationError("swept profile ends off the rotation axis; the surface would not close");
  }

  const std::size_t np = mesh.pieces.size();
  const std::size_t boundaries = cyclic ? np : np - 1;
  for (std::size_t p = 0; p < boundaries; ++p) {
    const SurfacePiece& a = mesh.pieces[p];
    const SurfacePiece& b = mesh.pieces[(p + 1) % np];
    for (int j = 0; j < mesh.cols; ++j) {
      const double r = mesh.rho[j];
      const Vec3 xa = as_vec3(integrand3d.extension_gradient_at(as_vecn(a.outward_sign * direction3(a.arc.to, r))));
      const Vec3 xb =
          as_vec3(integrand3d.extension_gradient_at(as_vecn(b.outward_sign * direction3(b.arc.from, r))));
      const Vec3 d = xa - xb;
      const Vec3 tau(-std::sin(r), std::cos(r), 0.0);
      mesh.max_junction_residual = std::max(mesh.max_junction_residual, (d - d.dot(tau) * tau).norm());
    }
  }

  ShapeOperatorField f = anisotropic_shape_operator(mesh);
  mesh.k1 = std::move(f.k1);
  mesh.k2 = std::move(f.k2);
  mesh.lambda = std::move(f.lambda);
  mesh.H2 = std::move(f.H2);
  mesh.excluded = std::move(f.excluded);
  return mesh;
}

ShapeOperatorField anisotropic_shape_operator(const SurfaceMesh& mesh) {
  ShapeOperatorField f;
  const std::size_t nv = mesh.size();
  f.k1.assign(nv, 0.0);
  f.k2.assign(nv, 0.0);
  f.lambda.assign(nv, 0.0);
  f.H2.assign(nv, 0.0);
  f.excluded.assign(nv, false);

  std::vector<bool> row_excluded(mesh.rows, false);
  for (int i = 0; i < mesh.rows; ++i) {
    if (!mesh.cyclic_rows && (i <= kPoleWindow || i >= mesh.rows - 1 - kPoleWindow)) row_excluded[i] = true;
  }
  const int np = static_cast<int>(mesh.pieces.size());
  for (int p = 0; p < np; ++p) {
    const SurfacePiece& pc = mesh.pieces[p];
    const bool junction_before = mesh.cyclic_rows || p > 0;
    const bool junction_after = mesh.cyclic_rows || p + 1 < np;
    for (int k = 0; k < pc.rows; ++k) {
      if (junction_before && k <= kJunctionWindow) row_excluded[pc.first_row + k] = true;
      if (junction_after && k >= pc.rows - kJunctionWindow) row_excluded[pc.first_row + k] = true;
    }
  }

  for (int i = 0; i < mesh.rows; ++i) {
    const bool pole_adjacent = !mesh.cyclic_rows && (i == 0 || i == mesh.rows - 1);
    for (int j = 0; j < mesh.cols; ++j) {
      const std::size_t v = mesh.index(i, j);
      f.excluded[v] = row_excluded[i];
      if (pole_adjacent) continue;
      const int ip = mesh.cyclic_rows ? (i + 1) % mesh.rows : i + 1;
      const int im = mesh.cyclic_rows ? (i + mesh.rows - 1) % mesh.rows : i - 1;
      const int jp = (j + 1) % mesh.cols, jm = (j + mesh.cols - 1) % mesh.cols;
      Eigen::Matrix<double, 3, 2> dx, dxi;
      dx.col(0) = 0.5 * (mesh.X[mesh.index(ip, j)] - mesh.X[mesh.index(im, j)]);
      dx.col(1) = 0.5 * (mesh.X[mesh.index(i, jp)] - mesh.X[mesh.index(i, jm)]);
      dxi.col(0) = 0.5 * (mesh.xi[mesh.index(ip, j)] - mesh.xi[mesh.index(im, j)]);
      dxi.col(1) = 0.5 * (mesh.xi[mesh.index(i, jp)] - mesh.xi[mesh.index(i, jm)]);
      const Eigen::Matrix2d g = dx.transpose() * dx;
      const double tr_g = g.trace();
      if (!(g.determinant() > 1e-14 * tr_g * tr_g)) {
        if (f.excluded[v]) continue;
        throw NumericalError("degenerate tangent plane at vertex " + std::to_string(v) + " (row " +
                             std::to_string(i) + ", column " + std::to_string(j) + ")");
      }
      const Eigen::Matrix2d s = -g.inverse() * (dx.transpose() * dxi);
      const double tr = s.trace(), det = s.determinant();
      double disc = 0.25 * tr * tr - det;
      if (disc < -1e-12 * std::max(1.0, 0.25 * tr * tr)) {
        if (f.excluded[v]) continue;
        throw NumericalError("complex anisotropic principal curvatures at vertex " + std::to_string(v));
      }
      disc = std::max(disc, 0.0);
      f.k1[v] = 0.5 * tr - std::sqrt(disc);
      f.k2[v] = 0.5 * tr + std::sqrt(disc);
      f.lambda[v] = 0.5 * tr;
      f.H2[v] = det;
    }
  }
  return f;
}

SurfaceMesh SurfaceMesh::scaled(double r) const {
  if (!(r > 0.0)) throw ValidationError("scale factor must be positive");
  SurfaceMesh m = *this;
  for (auto& x : m.X) x *= r;
  ShapeOperatorField f = anisotropic_shape_operator(m);
  m.k1 = std::move(f.k1);
  m.k2 = std::move(f.k2);
  m.lambda = std::move(f.lambda);
  m.H2 = std::move(f.H2);
  m.excluded = std::move(f.excluded);
  return m;
}

CamcVerdict classify_surface(const SurfaceMesh& mesh, double tol_camc) {
  if (mesh.lambda.size() != mesh.size()) throw ValidationError("classify_surface: curvature not computed");
  CamcVerdict v;
  v.tolerance = tol_camc;
  v.max_junction_jump = mesh.max_junction_residual;
  double sum = 0.0;
  long long n = 0;
  for (const auto& p : mesh.pieces) {
    PieceProfile pr;
    pr.arc = p.arc;
    pr.min = std::numeric_limits<double>::infinity();
    pr.max = -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (int k = 0; k < p.rows; ++k)
      for (int j = 0; j < mesh.cols; ++j) {
        const std::size_t idx = mesh.index(p.first_row + k, j);
        if (mesh.excluded[idx]) continue;
        ++pr.samples;
        s += mesh.lambda[idx];
        pr.min = std::min(pr.min, mesh.lambda[idx]);
        pr.max = std::max(pr.max, mesh.lambda[idx]);
      }
    if (pr.samples < 16)
      throw ValidationError("classify_surface: fewer than 16 usable vertices on a piece; increase the resolution");
    pr.mean = s / pr.samples;
    sum += s;
    n += pr.samples;
    v.profile.push_back(pr);
  }
  v.lambda = sum / static_cast<double>(n);
  for (std::size_t i = 0; i < mesh.size(); ++i)
    if (!mesh.excluded[i]) v.max_deviation = std::max(v.max_deviation, std::abs(mesh.lambda[i] - v.lambda));
  v.camc = v.max_deviation <= tol_camc && v.max_junction_jump <= kTolJunctionSurface;
  return v;
}

double energy_of_surface(const SurfaceMesh& mesh, const Integrand& integrand3d) {
  if (integrand3d.n() != 2) throw DimensionMismatch(2, integrand3d.n());
  const int row_pairs = mesh.cyclic_rows ? mesh.rows : mesh.rows - 1;
  const double drho = kTwoPi / mesh.cols;
  double e = 0.0;
  for (int i = 0; i < row_pairs; ++i) {
    const int i1 = (i + 1) % mesh.rows;
    const SurfacePiece& pc = mesh.pieces[mesh.row_piece[i]];
    const bool contiguous = mesh.row_piece[i1] == mesh.row_piece[i] && i1 > i;
    const double t_mid = 0.5 * (mesh.theta[i] + (contiguous ? mesh.theta[i1] : pc.arc.to));
    for (int j = 0; j < mesh.cols; ++j) {
      const int j1 = (j + 1) % mesh.cols;
      const Vec3& x00 = mesh.X[mesh.index(i, j)];
      const Vec3& x01 = mesh.X[mesh.index(i, j1)];
      const Vec3& x10 = mesh.X[mesh.index(i1, j)];
      const Vec3& x11 = mesh.X[mesh.index(i1, j1)];
      const double area = 0.5 * (x11 - x00).cross(x01 - x10).norm();
      const Vec3 nu = pc.outward_sign * direction3(t_mid, mesh.rho[j] + 0.5 * drho);
      e += integrand3d.homogeneous_extension(as_vecn(nu)) * area;
    }
  }
  return e;
}

bool is_watertight(const SurfaceMesh& mesh, double tol) {
  if (mesh.rows < 2 || mesh.cols < 3) return false;
  for (int i = 0; i < mesh.rows; ++i) {
    double spread = 0.0;
    for (int j = 1; j < mesh.cols; ++j)
      spread = std::max(spread, (mesh.X[mesh.index(i, j)] - mesh.X[mesh.index(i, 0)]).norm());
    if (mesh.pole_row[i] != (spread <= tol)) return false;
  }
  if (!mesh.cyclic_rows && !(mesh.pole_row.front() && mesh.pole_row.back())) return false;
  return true;
}

std::string to_obj(const SurfaceMesh& mesh) {
  std::ostringstream os;
  char buf[128];
  std::vector<int> first(mesh.rows);
  int next = 1;
  for (int i = 0; i < mesh.rows; ++i) {
    first[i] = next;
    const int count = mesh.pole_row[i] ? 1 : mesh.cols;
    for (int j = 0; j < count; ++j) {
      const Vec3& x = mesh.X[mesh.index(i, j)];
      std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", x.x(), x.y(), x.z());
      os << buf;
    }
    next += count;
  }
  auto vid = [&](int i, int j) { return mesh.pole_row[i] ? first[i] : first[i] + j; };
  const int row_pairs = mesh.cyclic_rows ? mesh.rows : mesh.rows - 1;
  for (int i = 0; i < row_pairs; ++i) {
    const int i1 = (i + 1) % mesh.rows;
    for (int j = 0; j < mesh.cols; ++j) {
      const int j1 = (j + 1) % mesh.cols;
      if (mesh.pole_row[i]) {
        os << "f " << vid(i, 0) << ' ' << vid(i1, j) << ' ' << vid(i1, j1) << '\n';
      } else if (mesh.pole_row[i1]) {
        os << "f " << vid(i, j) << ' ' << vid(i1, 0) << ' ' << vid(i, j1) << '\n';
      } else {
        os << "f " << vid(i, j) << ' ' << vid(i1, j) << ' ' << vid(i1, j1) << ' ' << vid(i, j1) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace aniso
