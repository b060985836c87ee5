#pragma once

#include <array>
#include <string>
#include <vector>

#include "aniso/arcs.hpp"
#include "aniso/integrand.hpp"

namespace aniso {

/// Singular parameters theta_1 < ... < theta_8 (unwrapped, starting at the
/// first root past the integrand's symmetry offset) and the crossing parameters
/// rho_1 < rho_2 between theta_1 and theta_2, for hexic2d and its pi/4 rotation.
struct HexicLandmarks {
  double offset = 0.0;  // 0 for hexic2d, pi/4 for hexic2d-rotated
  std::array<double, 8> theta{};
  double rho1 = 0.0, rho2 = 0.0;
  double alpha = 0.0;  // distance of the crossings from the origin
};

HexicLandmarks hexic_landmarks(const Integrand& gamma);

/// Catalogue names in order: wulff, Cgamma1, ..., Cgamma5.
const std::vector<std::string>& catalogue_names();

/// The Wulff boundary and the five stitched frontier curves, chained and ready
/// for stitching. Throws ValidationError for non-hexic integrands.
std::vector<ArcSpec> builtin_catalogue(const Integrand& gamma);
ArcSpec catalogue_curve(const Integrand& gamma, const std::string& name);

}  // namespace aniso
