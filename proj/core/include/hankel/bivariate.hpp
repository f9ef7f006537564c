#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hankel/rational.hpp"
#include "hankel/univariate.hpp"

namespace hankel {

/// Sparse bivariate polynomial in (x, y) with exact rational coefficients.
class BivariatePoly {
 public:
  BivariatePoly() = default;

  /// Build from (i, j, coeff) triples meaning coeff * x^i * y^j.
  BivariatePoly(std::initializer_list<std::tuple<int, int, Rational>> terms);

  void addTerm(int i, int j, const Rational& coeff);
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  int degreeX() const;
  int degreeY() const;

  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly operator-(const BivariatePoly& o) const;
  BivariatePoly operator*(const BivariatePoly& o) const;
  BivariatePoly operator-() const;
  BivariatePoly scaled(const Rational& r) const;
  bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

  BivariatePoly partialX() const;
  BivariatePoly partialY() const;

  double evalDouble(double x, double y) const;
  Rational eval(const Rational& x, const Rational& y) const;

  /// Restriction x = value, as a univariate polynomial in y.
  RationalPoly restrictX(const Rational& value) const;
  /// Restriction y = value, as a univariate polynomial in x.
  RationalPoly restrictY(const Rational& value) const;
  /// Substitute y = yOfX(x); result is univariate in x.
  RationalPoly substituteY(const RationalPoly& yOfX) const;

  /// Coefficient of x^i as a univariate polynomial in y.
  RationalPoly coeffOfXPower(int i) const;

  /// Upper bounds for sup over [0,1]^2 of |d/dx| and |d/dy| (sum of
  /// |coeff| * exponent). Used for grid-plus-Lipschitz certificates.
  std::pair<double, double> gradientBoundOnUnitBox() const;

  std::string str() const;

 private:
  std::map<std::pair<int, int>, Rational> terms_;
};

/// The region {(x, y) : 0 <= x <= 1, 0 <= y <= 1 - x^2} in the
/// (|c1|, |c2|) plane. Membership is exact for rational inputs.
struct OmegaDomain {
  bool contains(const Rational& x, const Rational& y) const {
    return x >= 0 && x <= 1 && y >= 0 && y <= Rational(1) - x * x;
  }
  bool contains(double x, double y, double tol = 0.0) const {
    return x >= -tol && x <= 1.0 + tol && y >= -tol && y <= 1.0 - x * x + tol;
  }
  /// Strict interior with a margin, for critical-point filtering.
  bool strictlyInterior(double x, double y, double margin) const {
    return x > margin && x < 1.0 - margin && y > margin && y < 1.0 - x * x - margin;
  }
};

}  // namespace hankel
