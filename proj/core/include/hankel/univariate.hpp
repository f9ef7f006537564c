#pragma once

#include <initializer_list>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

/// Dense univariate polynomial with exact rational coefficients,
/// coeffs()[i] * t^i. Trailing zeros are trimmed; the zero polynomial has an
/// empty coefficient vector and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(std::initializer_list<Rational> coeffs);
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(Rational c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  double evalDouble(double x) const;

  RationalPoly derivative() const;
  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator-() const;
  RationalPoly scaled(const Rational& r) const;
  bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }

  /// Remainder of *this divided by d (d nonzero).
  RationalPoly rem(const RationalPoly& d) const;
  /// Monic greatest common divisor.
  static RationalPoly gcd(RationalPoly a, RationalPoly b);
  /// this / gcd(this, this'); same roots, all simple.
  RationalPoly squareFreePart() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// An isolated real root: exact bracket plus the refined double value.
struct RootBracket {
  Rational lo;
  Rational hi;
  double value;
};

/// All real roots of p in the closed interval [lo, hi], isolated with a Sturm
/// sequence on the square-free part and refined by exact bisection until the
/// bracket width is below 1e-13. Throws ArgumentError for the zero polynomial
/// or a degenerate interval.
std::vector<RootBracket> isolateRealRoots(const RationalPoly& p, const Rational& lo,
                                          const Rational& hi);

}  // namespace hankel
