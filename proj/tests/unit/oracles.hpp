#pragma once

// Closed forms and quadratures written independently of the library.

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;

// cos^6 t + sin^6 t = 5/8 + 3/8 cos 4t.
inline double hexic_gamma(double t) { return 0.625 + 0.375 * std::cos(4.0 * t); }
inline double hexic_gamma_prime(double t) { return -1.5 * std::sin(4.0 * t); }
inline double hexic_A(double t) { return 0.625 - 5.625 * std::cos(4.0 * t); }

// xi = gamma nu + gamma' nu_perp.
inline std::array<double, 2> hexic_xi(double t) {
  const double g = hexic_gamma(t), gp = hexic_gamma_prime(t);
  return {g * std::cos(t) - gp * std::sin(t), g * std::sin(t) + gp * std::cos(t)};
}

// Roots of A in [0, 2 pi): cos 4t = 1/9.
inline std::array<double, 8> hexic_roots() {
  const double a = std::acos(1.0 / 9.0) / 4.0;
  std::array<double, 8> r{};
  for (int k = 0; k < 4; ++k) {
    r[2 * k] = a + k * pi / 2.0;
    r[2 * k + 1] = pi / 2.0 - a + k * pi / 2.0;
  }
  return r;
}

inline double hexic_rho1() { return std::acos(std::sqrt((1.0 + std::sqrt(5.0)) / 6.0)); }

// Gauss-Legendre nodes and weights on [-1, 1] by Newton on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

// Integral over [a, b] by composite Gauss-Legendre.
inline double integrate(const std::function<double(double)>& f, double a, double b, int panels = 64, int order = 16) {
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  double s = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    for (int i = 0; i < order; ++i) s += 0.5 * h * w[i] * f(lo + 0.5 * h * (x[i] + 1.0));
  }
  return s;
}

// Integral of g(nu) over the unit sphere for g depending on nu_z only.
inline double sphere_integral_zonal(const std::function<double(double)>& g) {
  return 2.0 * pi * integrate(g, -1.0, 1.0);
}

}  // namespace oracle
