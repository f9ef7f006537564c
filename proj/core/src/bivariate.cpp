#include "hankel/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "hankel/errors.hpp"

namespace hankel {

BivariatePoly::BivariatePoly(std::initializer_list<std::tuple<int, int, Rational>> terms) {
  for (const auto& [i, j, c] : terms) addTerm(i, j, c);
}

void BivariatePoly::addTerm(int i, int j, const Rational& coeff) {
  if (i < 0 || j < 0) throw ArgumentError("negative exponent");
  if (coeff == 0) return;
  auto key = std::make_pair(i, j);
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int BivariatePoly::degreeX() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BivariatePoly::degreeY() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
  BivariatePoly out = *this;
  for (const auto& [k, c] : o.terms_) out.addTerm(k.first, k.second, c);
  return out;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
  BivariatePoly out = *this;
  for (const auto& [k, c] : o.terms_) out.addTerm(k.first, k.second, -c);
  return out;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
  BivariatePoly out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      out.addTerm(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

BivariatePoly BivariatePoly::scaled(const Rational& r) const {
  BivariatePoly out;
  if (r == 0) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * r);
  return out;
}

BivariatePoly BivariatePoly::partialX() const {
  BivariatePoly out;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) out.addTerm(k.first - 1, k.second, c * Rational(k.first));
  return out;
}

BivariatePoly BivariatePoly::partialY() const {
  BivariatePoly out;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) out.addTerm(k.first, k.second - 1, c * Rational(k.second));
  return out;
}

double BivariatePoly::evalDouble(double x, double y) const {
  double acc = 0.0;
  for (const auto& [k, c] : terms_)
    acc += toDouble(c) * std::pow(x, k.first) * std::pow(y, k.second);
  return acc;
}

Rational BivariatePoly::eval(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < k.first; ++i) t *= x;
    for (int j = 0; j < k.second; ++j) t *= y;
    acc += t;
  }
  return acc;
}

RationalPoly BivariatePoly::restrictX(const Rational& value) const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(0, degreeY() + 1)), Rational(0));
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < k.first; ++i) t *= value;
    out[static_cast<std::size_t>(k.second)] += t;
  }
  return RationalPoly(std::move(out));
}

RationalPoly BivariatePoly::restrictY(const Rational& value) const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(0, degreeX() + 1)), Rational(0));
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (int j = 0; j < k.second; ++j) t *= value;
    out[static_cast<std::size_t>(k.first)] += t;
  }
  return RationalPoly(std::move(out));
}

RationalPoly BivariatePoly::substituteY(const RationalPoly& yOfX) const {
  RationalPoly acc;
  for (const auto& [k, c] : terms_) {
    RationalPoly term = RationalPoly::constant(c);
    std::vector<Rational> xpow(static_cast<std::size_t>(k.first) + 1, Rational(0));
    xpow.back() = Rational(1);
    term = term * RationalPoly(std::move(xpow));
    for (int j = 0; j < k.second; ++j) term = term * yOfX;
    acc = acc + term;
  }
  return acc;
}

RationalPoly BivariatePoly::coeffOfXPower(int i) const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(0, degreeY() + 1)), Rational(0));
  for (const auto& [k, c] : terms_)
    if (k.first == i) out[static_cast<std::size_t>(k.second)] += c;
  return RationalPoly(std::move(out));
}

std::pair<double, double> BivariatePoly::gradientBoundOnUnitBox() const {
  double lx = 0.0, ly = 0.0;
  for (const auto& [k, c] : terms_) {
    const double a = std::abs(toDouble(c));
    lx += a * k.first;
    ly += a * k.second;
  }
  return {lx, ly};
}

std::string BivariatePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = absRational(c);
    bool needCoeff = (a != 1) || (k.first == 0 && k.second == 0);
    if (needCoeff) os << toString(a);
    if (k.first > 0) {
      if (needCoeff) os << "*";
      os << "x";
      if (k.first > 1) os << "^" << k.first;
      needCoeff = true;
    }
    if (k.second > 0) {
      if (needCoeff || k.first > 0) os << "*";
      os << "y";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

}  // namespace hankel
