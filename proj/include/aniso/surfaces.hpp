#pragma once

#include <string>
#include <vector>

#include "aniso/arcs.hpp"
#include "aniso/curves.hpp"
#include "aniso/integrand.hpp"

namespace aniso {

inline constexpr double kTolCamcSurface = 1e-2;
inline constexpr int kPoleWindow = 2;
inline constexpr double kTolJunctionSurface = 1e-6;

/// Substitute x1^2 -> x1^2 + x2^2 in the profile's homogeneous extension.
Integrand rotational_lift(const Integrand& profile);

struct SurfacePiece {
  Arc arc;  // profile parameter interval
  int outward_sign = 1;
  int detA_sign = 1;
  int first_row = 0;
  int rows = 0;
};

/// Surface of revolution swept by a profile frontier curve about the x3 axis,
/// on a (profile parameter, rotation angle) grid.
struct SurfaceMesh {
  int rows = 0, cols = 0;
  bool cyclic_rows = false;  // torus-like: the profile curve avoids the axis
  std::vector<double> theta;  // profile parameter per row
  std::vector<double> rho;    // rotation angle per column
  std::vector<int> row_piece;
  std::vector<bool> pole_row;  // row collapsed onto the axis
  std::vector<SurfacePiece> pieces;
  std::vector<Vec3> X, normal, xi;  // row-major, index i * cols + j
  std::vector<double> k1, k2, lambda, H2;
  std::vector<bool> excluded;
  double max_junction_residual = 0.0;

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols + j; }
  std::size_t size() const { return X.size(); }
  /// r * X with xi unchanged and curvatures recomputed.
  SurfaceMesh scaled(double r) const;
};

/// Mesh the rotation of the frontier curve given by profile `arcs` (profile
/// parameters of integrand3d's meridian profile). A curve symmetric about the
/// axis is cut at its two axis points and its x1 > 0 half is swept; a curve
/// off the axis is swept whole. `n_theta` rows per swept arc (an arc cut at the
/// axis counts as its own arc), `n_rho` columns.
SurfaceMesh mesh_frontier_surface(const Integrand& integrand3d, const ArcSpec& arcs, int n_theta, int n_rho);

struct ShapeOperatorField {
  std::vector<double> k1, k2, lambda, H2;
  std::vector<bool> excluded;
};

/// S = -(dX^T dX)^{-1} dX^T d(xi) by central differences in the grid
/// parameters. Pole rows and their neighbours, and rows next to piece
/// boundaries, are excluded.
ShapeOperatorField anisotropic_shape_operator(const SurfaceMesh& mesh);

CamcVerdict classify_surface(const SurfaceMesh& mesh, double tol_camc = kTolCamcSurface);

/// Midpoint rule: gamma(normal at the quad centre) times quad area.
double energy_of_surface(const SurfaceMesh& mesh, const Integrand& integrand3d);

/// Pole rows collapse to single points and every face closes up.
bool is_watertight(const SurfaceMesh& mesh, double tol = 1e-9);

/// Wavefront OBJ text: quads, with triangle fans at collapsed poles.
std::string to_obj(const SurfaceMesh& mesh);

}  // namespace aniso
