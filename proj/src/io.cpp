#include "aniso/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "aniso/errors.hpp"

namespace aniso {

namespace {

void check_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& what) {
  if (!j.is_object()) throw ValidationError(what + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const auto& a : allowed) ok = ok || a == key;
    if (!ok) throw ValidationError(what + ": unknown key \"" + key + "\"");
  }
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw ValidationError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ValidationError(what + " must be finite");
  return v;
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void dump(const Json& j, std::ostringstream& os, int indent) {
  const std::string pad(indent + 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: sorted keys
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        dump(it.value(), os, indent + 2);
      }
      os << "\n" << std::string(indent, ' ') << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        dump(j[i], os, indent + 2);
      }
      os << "\n" << std::string(indent, ' ') << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

Json vec_json(const Vec2& v) { return Json::array({v.x(), v.y()}); }

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

IntegrandSpec parse_integrand_spec(const Json& j) {
  check_keys(j, {"n", "kind", "coefficients", "derivative_mode", "h"}, "integrand spec");
  IntegrandSpec s;
  if (!j.contains("kind") || !j["kind"].is_string()) throw ValidationError("integrand spec: \"kind\" string required");
  s.kind = integrand_kind_from_string(j["kind"].get<std::string>());
  switch (s.kind) {
    case IntegrandKind::hexic2d:
    case IntegrandKind::hexic2d_rotated:
      s.n = 1;
      break;
    case IntegrandKind::hexic3d:
    case IntegrandKind::hexic3d_rotated:
      s.n = 2;
      break;
    default:
      if (!j.contains("n")) throw ValidationError("integrand spec: \"n\" required for kind " + to_string(s.kind));
  }
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw ValidationError("integrand spec: \"n\" must be 1 or 2");
    const int n = j["n"].get<int>();
    if (n != 1 && n != 2) throw ValidationError("integrand spec: \"n\" must be 1 or 2");
    if ((s.kind != IntegrandKind::isotropic && s.kind != IntegrandKind::custom_polynomial) && n != s.n)
      throw DimensionMismatch(s.n, n);
    s.n = n;
  }
  if (s.kind == IntegrandKind::custom_polynomial) {
    if (!j.contains("coefficients") || !j["coefficients"].is_array() || j["coefficients"].empty())
      throw ValidationError("integrand spec: custom kind needs a non-empty \"coefficients\" list");
    const std::size_t width = static_cast<std::size_t>(s.n) + 2;
    for (const auto& term : j["coefficients"]) {
      if (!term.is_array() || term.size() != width)
        throw ValidationError("integrand spec: each coefficient is [c, exponents...] with " + std::to_string(width - 1) +
                              " exponents");
      Monomial m;
      m.coefficient = number(term[0], "coefficient");
      for (std::size_t k = 1; k < width; ++k) {
        if (!term[k].is_number_integer() || term[k].get<int>() < 0)
          throw ValidationError("integrand spec: exponents must be non-negative integers");
        m.exponents[k - 1] = term[k].get<int>();
      }
      s.coefficients.push_back(m);
    }
  } else if (j.contains("coefficients")) {
    throw ValidationError("integrand spec: \"coefficients\" only applies to custom-polynomial");
  }
  if (j.contains("derivative_mode")) {
    const std::string m = j["derivative_mode"].is_string() ? j["derivative_mode"].get<std::string>() : "";
    if (m == "analytic")
      s.derivative_mode = DerivativeMode::analytic;
    else if (m == "numeric")
      s.derivative_mode = DerivativeMode::numeric;
    else
      throw ValidationError("integrand spec: derivative_mode must be \"analytic\" or \"numeric\"");
  }
  if (j.contains("h")) {
    s.h = number(j["h"], "h");
    if (!(s.h > 0.0)) throw ValidationError("integrand spec: h must be positive");
  }
  return s;
}

IntegrandSpec load_integrand_spec(const std::string& path) { return parse_integrand_spec(parse_file(path)); }

ArcSpec parse_arc_spec(const Json& j) {
  check_keys(j, {"arcs", "units", "name"}, "arc spec");
  if (!j.contains("arcs") || !j["arcs"].is_array() || j["arcs"].empty())
    throw ValidationError("arc spec: non-empty \"arcs\" list required");
  if (j.contains("units") && j["units"] != "radians") throw ValidationError("arc spec: units must be \"radians\"");
  ArcSpec s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ValidationError("arc spec: name must be a string");
    s.name = j["name"].get<std::string>();
  }
  for (const auto& a : j["arcs"]) {
    check_keys(a, {"from", "to"}, "arc");
    if (!a.contains("from") || !a.contains("to")) throw ValidationError("arc: \"from\" and \"to\" required");
    s.arcs.push_back({number(a["from"], "arc from"), number(a["to"], "arc to")});
  }
  return s;
}

ArcSpec load_arc_spec(const std::string& path) { return parse_arc_spec(parse_file(path)); }

std::string dump_json(const Json& j) {
  std::ostringstream os;
  dump(j, os, 0);
  os << "\n";
  return os.str();
}

Json to_json(const ArcSpec& spec) {
  Json arcs = Json::array();
  for (const auto& a : spec.arcs) arcs.push_back({{"from", a.from}, {"to", a.to}});
  return {{"name", spec.name}, {"units", "radians"}, {"arcs", arcs}};
}

Json to_json(const SingularSet& s) {
  Json roots = Json::array();
  for (const auto& r : s.roots)
    roots.push_back({{"theta", r.theta}, {"theta_over_pi", r.theta / kPi}, {"image", vec_json(r.image)},
                     {"degenerate", r.degenerate}});
  Json ids = Json::array();
  for (const auto& [a, b] : s.identifications) ids.push_back(Json::array({a, b}));
  return {{"roots", roots}, {"identifications", ids}};
}

Json to_json(const SelfIntersections& s) {
  auto list = [](const std::vector<Crossing>& cs) {
    Json out = Json::array();
    for (const auto& c : cs)
      out.push_back({{"point", vec_json(c.point)}, {"theta_a", c.theta_a}, {"theta_b", c.theta_b}, {"inner", c.inner}});
    return out;
  };
  return {{"crossings", list(s.crossings)}, {"corners", list(s.corners)}};
}

Json to_json(const WulffShape& w) {
  Json verts = Json::array();
  for (const auto& v : w.vertices) verts.push_back(vec_json(v));
  Json corners = Json::array();
  for (std::size_t k = 0; k < w.corners.size(); ++k)
    corners.push_back({{"vertex", w.corners[k]},
                       {"point", vec_json(w.vertices[w.corners[k]])},
                       {"normal_range", Json::array({w.corner_normal_ranges[k].first, w.corner_normal_ranges[k].second})}});
  return {{"n", w.n}, {"rotational", w.rotational}, {"vertices", verts}, {"corners", corners}};
}

Json to_json(const CamcVerdict& v) {
  Json pieces = Json::array();
  for (const auto& p : v.profile)
    pieces.push_back({{"from", p.arc.from}, {"to", p.arc.to}, {"samples", p.samples}, {"mean", p.mean},
                      {"min", p.min}, {"max", p.max}});
  return {{"camc", v.camc},           {"lambda", v.lambda},
          {"max_deviation", v.max_deviation}, {"max_junction_jump", v.max_junction_jump},
          {"tolerance", v.tolerance}, {"pieces", pieces}};
}

std::string frontier_csv(const std::vector<FrontierSample>& samples) {
  std::ostringstream os;
  const bool two = !samples.empty() && samples.front().xi.size() == 3;
  os << (two ? "theta,rho,nu_x,nu_y,nu_z,xi_x,xi_y,xi_z,detA\n" : "theta,nu_x,nu_y,xi_x,xi_y,detA\n");
  for (const auto& s : samples) {
    os << format_double(s.theta);
    if (two) os << ',' << format_double(s.rho);
    const VecN& nu = s.nu.components();
    for (int k = 0; k < nu.size(); ++k) os << ',' << format_double(nu(k));
    for (int k = 0; k < s.xi.size(); ++k) os << ',' << format_double(s.xi(k));
    os << ',' << format_double(s.A.determinant) << '\n';
  }
  return os.str();
}

std::string curve_csv(const ClosedCurve& curve) {
  std::ostringstream os;
  os << "s,x,y,nu_x,nu_y,Lambda,excluded\n";
  double s = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (i) s += (curve.points[i] - curve.points[i - 1]).norm();
    os << format_double(s) << ',' << format_double(curve.points[i].x()) << ',' << format_double(curve.points[i].y())
       << ',' << format_double(curve.normal[i].x()) << ',' << format_double(curve.normal[i].y()) << ','
       << format_double(curve.lambda[i]) << ',' << (curve.excluded[i] ? 1 : 0) << '\n';
  }
  return os.str();
}

namespace {

std::string svg_point(const Vec2& p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f,%.6f", p.x(), -p.y());
  return buf;
}

}  // namespace

void SvgCanvas::polyline(const std::vector<Vec2>& points, const std::vector<int>& detA_sign, bool closed,
                         const std::string& color) {
  const std::size_t m = points.size();
  if (m < 2) return;
  const std::size_t segs = closed ? m : m - 1;
  auto solid = [&](std::size_t i) { return detA_sign.empty() || detA_sign[i] > 0; };
  std::size_t i = 0;
  while (i < segs) {
    const bool s = solid(i);
    std::string pts = svg_point(points[i]);
    std::size_t k = i;
    while (k < segs && solid(k) == s) {
      pts += " " + svg_point(points[(k + 1) % m]);
      ++k;
    }
    body_ += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"0.006\"" +
             (s ? std::string() : std::string(" stroke-dasharray=\"0.03,0.02\"")) + " points=\"" + pts + "\"/>\n";
    i = k;
  }
}

void SvgCanvas::polygon(const std::vector<Vec2>& points, const std::string& color) {
  std::string pts;
  for (const auto& p : points) pts += (pts.empty() ? "" : " ") + svg_point(p);
  body_ += "<polygon fill=\"none\" stroke=\"" + color + "\" stroke-width=\"0.006\" points=\"" + pts + "\"/>\n";
}

void SvgCanvas::marker(const Vec2& p, const std::string& color) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"0.02\" fill=\"%s\"/>\n", p.x(), -p.y(),
                color.c_str());
  body_ += buf;
}

std::string SvgCanvas::str() const {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
         "viewBox=\"-1.3 -1.3 2.6 2.6\">\n" +
         body_ + "</svg>\n";
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << contents;
  if (!out) throw ValidationError("failed writing " + path);
}

}  // namespace aniso
