#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

/// Exponent vector of a monomial in the Schwarz coefficients c1..c4.
struct Monomial {
  std::array<std::uint8_t, 4> e{0, 0, 0, 0};

  auto operator<=>(const Monomial&) const = default;

  int totalDegree() const { return e[0] + e[1] + e[2] + e[3]; }
};

/// Sparse multivariate polynomial in c1..c4 with exact rational coefficients.
/// Zero coefficients are never stored.
class CoeffPolynomial {
 public:
  CoeffPolynomial() = default;
  CoeffPolynomial(int value) : CoeffPolynomial(Rational(value)) {}  // NOLINT: ring scalar
  explicit CoeffPolynomial(Rational value);

  /// The variable c_i (1-based, i in 1..4).
  static CoeffPolynomial variable(int i);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  /// Constant term (the whole value when isConstant()).
  Rational constantValue() const;
  int totalDegree() const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  void addTerm(const Monomial& m, const Rational& coeff);

  CoeffPolynomial operator+(const CoeffPolynomial& o) const;
  CoeffPolynomial operator-(const CoeffPolynomial& o) const;
  CoeffPolynomial operator-() const;
  CoeffPolynomial operator*(const CoeffPolynomial& o) const;
  /// Division by a nonzero constant polynomial; anything else throws
  /// NotInvertibleError.
  CoeffPolynomial operator/(const CoeffPolynomial& o) const;
  bool operator==(const CoeffPolynomial& o) const { return terms_ == o.terms_; }

  CoeffPolynomial scaled(const Rational& r) const;
  CoeffPolynomial pow(int exponent) const;

  std::complex<double> eval(const std::array<std::complex<double>, 4>& c) const;

  /// Canonical text form, e.g. "2*c1 + (5/6)*c1*c2 - c3^2".
  std::string str() const;
  /// Display-math fragment, e.g. "2c_{1} + \frac{5}{6}c_{1}c_{2}".
  std::string latex() const;

 private:
  std::map<Monomial, Rational> terms_;
};

inline CoeffPolynomial operator*(const Rational& r, const CoeffPolynomial& p) {
  return p.scaled(r);
}

/// Flattened double-coefficient copy for fast repeated complex evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const CoeffPolynomial& p);

  std::complex<double> eval(const std::array<std::complex<double>, 4>& c) const;

 private:
  struct Term {
    double coeff;
    std::array<std::uint8_t, 4> e;
  };
  std::vector<Term> terms_;
  std::array<int, 4> maxExp_{0, 0, 0, 0};
};

}  // namespace hankel
