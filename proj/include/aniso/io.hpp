#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "aniso/arcs.hpp"
#include "aniso/curves.hpp"
#include "aniso/frontier.hpp"
#include "aniso/integrand.hpp"

namespace aniso {

using Json = nlohmann::json;

/// Strict parse of {"n", "kind", "coefficients", "derivative_mode", "h"}.
/// Custom coefficients are [c, e1, e2] (n = 1) or [c, e1, e2, e3] (n = 2) per
/// monomial. Unknown keys are a ValidationError.
IntegrandSpec parse_integrand_spec(const Json& j);
IntegrandSpec load_integrand_spec(const std::string& path);

/// Strict parse of {"arcs": [{"from", "to"}...], "units": "radians", "name"?}.
ArcSpec parse_arc_spec(const Json& j);
ArcSpec load_arc_spec(const std::string& path);

/// Sorted keys, 17 significant digits, two-space indent.
std::string dump_json(const Json& j);

Json to_json(const ArcSpec& spec);
Json to_json(const SingularSet& s);
Json to_json(const SelfIntersections& s);
Json to_json(const WulffShape& w);
Json to_json(const CamcVerdict& v);

/// theta, nu_x, nu_y, xi_x, xi_y, detA (n = 1); n = 2 adds rho and nu_z, xi_z.
std::string frontier_csv(const std::vector<FrontierSample>& samples);
/// s, x, y, nu_x, nu_y, Lambda, excluded.
std::string curve_csv(const ClosedCurve& curve);

struct SvgMarker {
  Vec2 point;
  std::string color;
};

/// SVG 1.1 on the fixed view box [-1.3, 1.3]^2, y up. Runs with det A > 0 are
/// solid, the rest dashed.
class SvgCanvas {
 public:
  void polyline(const std::vector<Vec2>& points, const std::vector<int>& detA_sign, bool closed,
                const std::string& color = "black");
  void polygon(const std::vector<Vec2>& points, const std::string& color);
  void marker(const Vec2& p, const std::string& color);
  std::string str() const;

 private:
  std::string body_;
};

void write_text_file(const std::string& path, const std::string& contents);
std::string format_double(double x);

}  // namespace aniso
