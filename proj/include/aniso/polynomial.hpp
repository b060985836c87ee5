#pragma once

#include <array>
#include <vector>

#include "aniso/types.hpp"

namespace aniso {

struct Monomial {
  double coefficient = 0.0;
  std::array<int, 3> exponents{0, 0, 0};
};

// A homogeneous polynomial in 2 or 3 variables with exact first and second
// derivatives.
class HomogeneousPolynomial {
 public:
  HomogeneousPolynomial() = default;
  /// Throws ValidationError if the terms are not homogeneous of one degree or
  /// use exponents beyond `variables`.
  HomogeneousPolynomial(int variables, std::vector<Monomial> terms);

  int variables() const { return variables_; }
  int degree() const { return degree_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  double value(const VecN& x) const;
  VecN gradient(const VecN& x) const;
  MatN hessian(const VecN& x) const;

  HomogeneousPolynomial scaled(double c) const;

  /// Restrict a 3-variable polynomial to the (x1, x3) plane (x2 = 0).
  HomogeneousPolynomial restrict_to_meridian() const;

  /// Substitute x1^2 -> x1^2 + x2^2 in a 2-variable polynomial whose x1
  /// exponents are all even; the second variable becomes x3.
  HomogeneousPolynomial lift_about_vertical_axis() const;

  /// Combine like terms and drop exact zeros; ordering is deterministic.
  HomogeneousPolynomial normalized() const;

 private:
  int variables_ = 0;
  int degree_ = 0;
  std::vector<Monomial> terms_;
};

}  // namespace aniso
