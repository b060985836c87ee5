#pragma once

#include <variant>
#include <vector>

#include "aniso/curves.hpp"
#include "aniso/integrand.hpp"
#include "aniso/surfaces.hpp"

namespace aniso {

using Shape = std::variant<ClosedCurve, SurfaceMesh>;

/// The homothetic family X_t = sqrt(2 (c - t)) X_base.
struct FlowFamily {
  Integrand integrand;
  double c = 1.0;
  Shape base;

  int n() const { return std::holds_alternative<ClosedCurve>(base) ? 1 : 2; }
  /// sqrt(2 (c - t)); throws for t > c.
  double scale(double t) const;
};

FlowFamily make_flow_family(const Integrand& gamma, double c, Shape base);

struct FlowState {
  double t = 0.0;
  double scale = 0.0;
  Shape shape;
  double lambda_expected = 0.0;  // mean base Lambda divided by the scale
  double lambda_min = 0.0, lambda_max = 0.0;  // recomputed on the scaled shape
};

/// Scaled copy at time t with Lambda recomputed on it. Throws for t >= c.
FlowState family_at(const FlowFamily& family, double t);

/// max |(X_{t+dt} - X_{t-dt}) / (2 dt) - Lambda_t xi_t| over non-excluded
/// points, with Lambda_t measured on the scaled shape.
double flow_residual(const FlowFamily& family, double t, double dt);

struct DissipationReport {
  double lhs = 0.0;           // centred difference of the energy
  double rhs = 0.0;           // -integral of n Lambda^2 gamma(nu) dA at time t
  double analytic_lhs = 0.0;  // d/dt [scale^n] * F(base)
};

DissipationReport dissipation_check(const FlowFamily& family, double t, double dt);

/// F(X_t).
double energy_at(const FlowFamily& family, double t);

/// Closed curve through arbitrary counterclockwise points, with normals from
/// central differences and xi = xi(normal). One piece, nothing excluded.
ClosedCurve curve_from_polyline(const Integrand& gamma, const std::vector<Vec2>& points);

}  // namespace aniso
