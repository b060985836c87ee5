#include "aniso/polynomial.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "aniso/errors.hpp"

namespace aniso {

namespace {

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(int variables, std::vector<Monomial> terms)
    : variables_(variables), terms_(std::move(terms)) {
  if (variables_ != 2 && variables_ != 3) throw ValidationError("polynomial must have 2 or 3 variables");
  if (terms_.empty()) throw ValidationError("polynomial has no terms");
  degree_ = -1;
  for (const auto& t : terms_) {
    int d = 0;
    for (int i = 0; i < 3; ++i) {
      if (t.exponents[i] < 0) throw ValidationError("negative exponent in polynomial term");
      if (i >= variables_ && t.exponents[i] != 0)
        throw ValidationError("exponent given for variable " + std::to_string(i + 1) + " of a " +
                              std::to_string(variables_) + "-variable polynomial");
      d += t.exponents[i];
    }
    if (degree_ < 0) degree_ = d;
    if (d != degree_) throw ValidationError("polynomial is not homogeneous");
  }
}

double HomogeneousPolynomial::value(const VecN& x) const {
  double s = 0.0;
  for (const auto& t : terms_) {
    double m = t.coefficient;
    for (int i = 0; i < variables_; ++i) m *= ipow(x[i], t.exponents[i]);
    s += m;
  }
  return s;
}

VecN HomogeneousPolynomial::gradient(const VecN& x) const {
  VecN g = VecN::Zero(variables_);
  for (const auto& t : terms_) {
    for (int k = 0; k < variables_; ++k) {
      const int ek = t.exponents[k];
      if (ek == 0) continue;
      double m = t.coefficient * ek;
      for (int i = 0; i < variables_; ++i) m *= ipow(x[i], i == k ? ek - 1 : t.exponents[i]);
      g[k] += m;
    }
  }
  return g;
}

MatN HomogeneousPolynomial::hessian(const VecN& x) const {
  MatN h = MatN::Zero(variables_, variables_);
  for (const auto& t : terms_) {
    for (int k = 0; k < variables_; ++k) {
      for (int l = k; l < variables_; ++l) {
        std::array<int, 3> e = t.exponents;
        double m = t.coefficient;
        m *= e[k];
        e[k] -= 1;
        if (m == 0.0) continue;
        m *= e[l];
        e[l] -= 1;
        if (m == 0.0) continue;
        for (int i = 0; i < variables_; ++i) m *= ipow(x[i], e[i]);
        h(k, l) += m;
        if (l != k) h(l, k) += m;
      }
    }
  }
  return h;
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(double c) const {
  auto terms = terms_;
  for (auto& t : terms) t.coefficient *= c;
  return HomogeneousPolynomial(variables_, std::move(terms));
}

HomogeneousPolynomial HomogeneousPolynomial::restrict_to_meridian() const {
  if (variables_ != 3) throw DimensionMismatch(2, variables_ - 1);
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    if (t.exponents[1] != 0) continue;
    out.push_back({t.coefficient, {t.exponents[0], t.exponents[2], 0}});
  }
  if (out.empty()) throw ValidationError("polynomial vanishes on the meridian plane");
  return HomogeneousPolynomial(2, std::move(out)).normalized();
}

HomogeneousPolynomial HomogeneousPolynomial::lift_about_vertical_axis() const {
  if (variables_ != 2) throw DimensionMismatch(1, variables_ - 1);
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    if (t.exponents[0] % 2 != 0)
      throw ValidationError("profile polynomial has an odd power of the radial variable");
    const int a = t.exponents[0] / 2;
    for (int k = 0; k <= a; ++k)
      out.push_back({t.coefficient * binomial(a, k), {2 * k, 2 * (a - k), t.exponents[1]}});
  }
  return HomogeneousPolynomial(3, std::move(out)).normalized();
}

HomogeneousPolynomial HomogeneousPolynomial::normalized() const {
  std::map<std::array<int, 3>, double> acc;
  for (const auto& t : terms_) acc[t.exponents] += t.coefficient;
  std::vector<Monomial> out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0.0) out.push_back({it->second, it->first});
  if (out.empty()) throw ValidationError("polynomial is identically zero");
  return HomogeneousPolynomial(variables_, std::move(out));
}

}  // namespace aniso
