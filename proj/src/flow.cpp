#include "aniso/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aniso/errors.hpp"
#include "aniso/geometry.hpp"

namespace aniso {

namespace {

Shape scaled_shape(const Shape& s, double r) {
  return std::visit([r](const auto& x) -> Shape { return x.scaled(r); }, s);
}

double shape_energy(const Shape& s, const Integrand& gamma) {
  if (const auto* c = std::get_if<ClosedCurve>(&s)) return energy_of_curve(*c, gamma);
  return energy_of_surface(std::get<SurfaceMesh>(s), gamma);
}

// Lambda with excluded samples replaced by the nearest usable sample of the
// same piece.
std::vector<double> filled_lambda(const ClosedCurve& c) {
  std::vector<double> out = c.lambda;
  for (const auto& p : c.pieces) {
    int first_ok = -1, last_ok = -1;
    for (int k = 0; k < p.count; ++k)
      if (!c.excluded[p.first + k]) {
        if (first_ok < 0) first_ok = k;
        last_ok = k;
      }
    if (first_ok < 0) throw NumericalError("curve piece without usable curvature samples");
    for (int k = 0; k < p.count; ++k) {
      if (!c.excluded[p.first + k]) continue;
      out[p.first + k] = c.lambda[p.first + (k < first_ok ? first_ok : last_ok)];
    }
  }
  return out;
}

std::vector<double> filled_lambda(const SurfaceMesh& m) {
  std::vector<double> out = m.lambda;
  for (const auto& p : m.pieces) {
    int first_ok = -1, last_ok = -1;
    for (int k = 0; k < p.rows; ++k)
      if (!m.excluded[m.index(p.first_row + k, 0)]) {
        if (first_ok < 0) first_ok = k;
        last_ok = k;
      }
    if (first_ok < 0) throw NumericalError("surface piece without usable curvature rows");
    for (int k = 0; k < p.rows; ++k) {
      const int row = p.first_row + k;
      if (!m.excluded[m.index(row, 0)]) continue;
      const int src = p.first_row + (k < first_ok ? first_ok : last_ok);
      for (int j = 0; j < m.cols; ++j) out[m.index(row, j)] = m.lambda[m.index(src, j)];
    }
  }
  return out;
}

VecN as_vecn(const Vec2& v) {
  VecN out(2);
  out << v.x(), v.y();
  return out;
}

VecN as_vecn(const Vec3& v) {
  VecN out(3);
  out << v.x(), v.y(), v.z();
  return out;
}

double dissipation_integral(const ClosedCurve& c, const Integrand& gamma) {
  const std::vector<double> lam = filled_lambda(c);
  const std::size_t m = c.size();
  std::vector<double> f(m);
  for (std::size_t i = 0; i < m; ++i) f[i] = lam[i] * lam[i] * gamma.homogeneous_extension(as_vecn(c.normal[i]));
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    s += 0.5 * (f[i] + f[j]) * (c.points[j] - c.points[i]).norm();
  }
  return -s;
}

double dissipation_integral(const SurfaceMesh& mesh, const Integrand& gamma) {
  const std::vector<double> lam = filled_lambda(mesh);
  std::vector<double> f(mesh.size());
  for (std::size_t v = 0; v < mesh.size(); ++v)
    f[v] = 2.0 * lam[v] * lam[v] * gamma.homogeneous_extension(as_vecn(mesh.normal[v]));
  const int row_pairs = mesh.cyclic_rows ? mesh.rows : mesh.rows - 1;
  double s = 0.0;
  for (int i = 0; i < row_pairs; ++i) {
    const int i1 = (i + 1) % mesh.rows;
    for (int j = 0; j < mesh.cols; ++j) {
      const int j1 = (j + 1) % mesh.cols;
      const Vec3& x00 = mesh.X[mesh.index(i, j)];
      const Vec3& x01 = mesh.X[mesh.index(i, j1)];
      const Vec3& x10 = mesh.X[mesh.index(i1, j)];
      const Vec3& x11 = mesh.X[mesh.index(i1, j1)];
      const double area = 0.5 * (x11 - x00).cross(x01 - x10).norm();
      // Pole rows carry no curvature; use the adjacent row's value there.
      auto val = [&](int row, int col) {
        int r = row;
        if (mesh.pole_row[r]) r = r == 0 ? 1 : mesh.rows - 2;
        return f[mesh.index(r, col)];
      };
      s += 0.25 * (val(i, j) + val(i, j1) + val(i1, j) + val(i1, j1)) * area;
    }
  }
  return -s;
}

}  // namespace

double FlowFamily::scale(double t) const {
  if (t > c) throw ValidationError("time is past the extinction time c");
  return std::sqrt(2.0 * (c - t));
}

FlowFamily make_flow_family(const Integrand& gamma, double c, Shape base) {
  if (!(c > 0.0)) throw ValidationError("extinction time c must be positive");
  FlowFamily f{gamma, c, std::move(base)};
  if (gamma.n() != f.n()) throw DimensionMismatch(f.n(), gamma.n());
  return f;
}

FlowState family_at(const FlowFamily& family, double t) {
  if (t >= family.c) {
    std::ostringstream os;
    os.precision(17);
    os << "the family is extinct at t = " << t << " (c = " << family.c << ")";
    throw ValidationError(os.str());
  }
  FlowState st;
  st.t = t;
  st.scale = family.scale(t);
  st.shape = scaled_shape(family.base, st.scale);
  double base_mean = 0.0;
  if (const auto* c = std::get_if<ClosedCurve>(&family.base)) {
    base_mean = classify(*c, std::numeric_limits<double>::infinity()).lambda;
  } else {
    base_mean = classify_surface(std::get<SurfaceMesh>(family.base), std::numeric_limits<double>::infinity()).lambda;
  }
  st.lambda_expected = base_mean / st.scale;
  st.lambda_min = std::numeric_limits<double>::infinity();
  st.lambda_max = -std::numeric_limits<double>::infinity();
  std::visit(
      [&](const auto& s) {
        for (std::size_t i = 0; i < s.lambda.size(); ++i) {
          if (s.excluded[i]) continue;
          st.lambda_min = std::min(st.lambda_min, s.lambda[i]);
          st.lambda_max = std::max(st.lambda_max, s.lambda[i]);
        }
      },
      st.shape);
  return st;
}

double flow_residual(const FlowFamily& family, double t, double dt) {
  if (!(dt > 0.0)) throw ValidationError("dt must be positive");
  if (!(t + dt < family.c)) throw ValidationError("t + dt must be before the extinction time");
  const double rate = (family.scale(t + dt) - family.scale(t - dt)) / (2.0 * dt);
  const FlowState st = family_at(family, t);
  double worst = 0.0;
  if (const auto* base = std::get_if<ClosedCurve>(&family.base)) {
    const auto& now = std::get<ClosedCurve>(st.shape);
    for (std::size_t i = 0; i < now.size(); ++i) {
      if (now.excluded[i]) continue;
      worst = std::max(worst, (rate * base->points[i] - now.lambda[i] * now.xi[i]).norm());
    }
  } else {
    const auto& mbase = std::get<SurfaceMesh>(family.base);
    const auto& now = std::get<SurfaceMesh>(st.shape);
    for (std::size_t i = 0; i < now.size(); ++i) {
      if (now.excluded[i]) continue;
      worst = std::max(worst, (rate * mbase.X[i] - now.lambda[i] * now.xi[i]).norm());
    }
  }
  return worst;
}

double energy_at(const FlowFamily& family, double t) {
  return shape_energy(scaled_shape(family.base, family.scale(t)), family.integrand);
}

DissipationReport dissipation_check(const FlowFamily& family, double t, double dt) {
  if (!(dt > 0.0)) throw ValidationError("dt must be positive");
  if (!(t + dt < family.c)) throw ValidationError("t + dt must be before the extinction time");
  DissipationReport r;
  r.lhs = (energy_at(family, t + dt) - energy_at(family, t - dt)) / (2.0 * dt);
  const FlowState st = family_at(family, t);
  if (const auto* c = std::get_if<ClosedCurve>(&st.shape)) {
    r.rhs = dissipation_integral(*c, family.integrand);
  } else {
    r.rhs = dissipation_integral(std::get<SurfaceMesh>(st.shape), family.integrand);
  }
  const int n = family.n();
  const double s = st.scale;
  r.analytic_lhs = -n * std::pow(s, n - 2) * shape_energy(family.base, family.integrand);
  return r;
}

ClosedCurve curve_from_polyline(const Integrand& gamma, const std::vector<Vec2>& points) {
  if (gamma.n() != 1) throw DimensionMismatch(1, gamma.n());
  const std::size_t m = points.size();
  if (m < 16) throw ValidationError("polyline needs at least 16 points");
  ClosedCurve c;
  c.points = points;
  c.window = 0;
  c.params.resize(m);
  c.normal.resize(m);
  c.xi.resize(m);
  c.piece.assign(m, 0);
  c.signed_area = signed_area(points);
  if (!(c.signed_area > 0.0)) throw ValidationError("polyline must be counterclockwise");
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 d = points[(i + 1) % m] - points[(i + m - 1) % m];
    if (d.norm() == 0.0) throw NumericalError("degenerate tangent in polyline");
    const Vec2 nu(d.y() / d.norm(), -d.x() / d.norm());
    c.params[i] = std::atan2(nu.y(), nu.x());
    c.normal[i] = nu;
    const VecN g = gamma.extension_gradient_at(as_vecn(nu));
    c.xi[i] = Vec2(g(0), g(1));
  }
  CurvePiece p;
  p.arc = Arc{0.0, kTwoPi};
  p.first = 0;
  p.count = static_cast<int>(m);
  c.pieces.push_back(p);
  c.spec.name = "polyline";
  c.spec.arcs.push_back(p.arc);
  try {
    c.embedded = polyline_self_crossings(points, true).empty();
  } catch (const NumericalError&) {
    c.embedded = false;
  }
  CurvatureField f = anisotropic_curvature_along(c, c.window);
  c.lambda = std::move(f.lambda);
  c.excluded = std::move(f.excluded);
  return c;
}

}  // namespace aniso
