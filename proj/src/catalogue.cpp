#include "aniso/catalogue.hpp"

#include <algorithm>
#include <cmath>

#include "aniso/curves.hpp"
#include "aniso/errors.hpp"
#include "aniso/frontier.hpp"

namespace aniso {

HexicLandmarks hexic_landmarks(const Integrand& gamma) {
  HexicLandmarks h;
  if (gamma.kind() == IntegrandKind::hexic2d) {
    h.offset = 0.0;
  } else if (gamma.kind() == IntegrandKind::hexic2d_rotated) {
    h.offset = kPi / 4;
  } else {
    throw ValidationError("the builtin catalogue exists only for hexic2d and hexic2d-rotated, not " +
                          to_string(gamma.kind()));
  }
  const SingularSet sing = singular_set(gamma);
  if (sing.roots.size() != 8)
    throw NumericalError("expected 8 singular parameters, found " + std::to_string(sing.roots.size()));
  std::vector<double> rel;
  for (const auto& r : sing.roots) rel.push_back(wrap_angle(r.theta - h.offset));
  std::sort(rel.begin(), rel.end());
  for (int j = 0; j < 8; ++j) h.theta[j] = rel[j] + h.offset;

  const SelfIntersections si = self_intersections(gamma, sample_frontier(gamma, kSingularGrid));
  std::vector<double> params;
  for (const auto& c : si.crossings) {
    params.push_back(wrap_angle(c.theta_a - h.theta[0]) + h.theta[0]);
    params.push_back(wrap_angle(c.theta_b - h.theta[0]) + h.theta[0]);
  }
  std::sort(params.begin(), params.end());
  if (params.size() != 8) throw NumericalError("expected 4 transverse crossings of the frontier");
  h.rho1 = params[0];
  h.rho2 = params[1];
  if (!(h.rho1 > h.theta[0] && h.rho2 < h.theta[1]))
    throw NumericalError("crossing parameters are not between the first two singular parameters");
  h.alpha = frontier_point(gamma, h.rho1).norm();
  return h;
}

const std::vector<std::string>& catalogue_names() {
  static const std::vector<std::string> names{"wulff", "Cgamma1", "Cgamma2", "Cgamma3", "Cgamma4", "Cgamma5"};
  return names;
}

std::vector<ArcSpec> builtin_catalogue(const Integrand& gamma) {
  const HexicLandmarks h = hexic_landmarks(gamma);
  const auto& t = h.theta;
  const double r1 = h.rho1, r2 = h.rho2, q = kPi / 2;
  const double t8m = t[7] - kTwoPi;
  std::vector<std::vector<Arc>> sets{
      {{r1, r2}, {r1 + q, r2 + q}, {r1 + 2 * q, r2 + 2 * q}, {r1 + 3 * q, r2 + 3 * q}},
      {{t[1], t[2]}, {t[3], t[4]}, {t[5], t[6]}, {t8m, t[0]}},
      {{t[0], t[1]}, {t[4], t[5]}},
      {{t8m, t[0]}, {t[2], r2 + q}, {r1 + 2 * q, t[5]}},
      {{t[0], r1},
       {r2, t[1]},
       {t[2], r1 + q},
       {r2 + q, t[3]},
       {t[4], r1 + 2 * q},
       {r2 + 2 * q, t[5]},
       {t[6], r1 + 3 * q},
       {r2 + 3 * q, t[7]}},
      {{r2 - q, r1}},
  };
  std::vector<ArcSpec> out;
  for (std::size_t i = 0; i < sets.size(); ++i) out.push_back(chain_arcs(gamma, sets[i], catalogue_names()[i]));
  return out;
}

ArcSpec catalogue_curve(const Integrand& gamma, const std::string& name) {
  const auto& names = catalogue_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw ValidationError("unknown catalogue curve '" + name + "'");
  return builtin_catalogue(gamma)[static_cast<std::size_t>(it - names.begin())];
}

}  // namespace aniso
