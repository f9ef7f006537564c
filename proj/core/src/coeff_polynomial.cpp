#include "hankel/coeff_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hankel/errors.hpp"

namespace hankel {

CoeffPolynomial::CoeffPolynomial(Rational value) {
  if (value != 0) terms_.emplace(Monomial{}, std::move(value));
}

CoeffPolynomial CoeffPolynomial::variable(int i) {
  if (i < 1 || i > 4) throw ArgumentError("variable index must be in 1..4");
  CoeffPolynomial p;
  Monomial m;
  m.e[static_cast<std::size_t>(i - 1)] = 1;
  p.terms_.emplace(m, Rational(1));
  return p;
}

bool CoeffPolynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational CoeffPolynomial::constantValue() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int CoeffPolynomial::totalDegree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.totalDegree());
  return deg;
}

Rational CoeffPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CoeffPolynomial::addTerm(const Monomial& m, const Rational& coeff) {
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else if (it->second == 0) {
    terms_.erase(it);
  }
}

CoeffPolynomial CoeffPolynomial::operator+(const CoeffPolynomial& o) const {
  CoeffPolynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.addTerm(m, c);
  return out;
}

CoeffPolynomial CoeffPolynomial::operator-(const CoeffPolynomial& o) const {
  CoeffPolynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.addTerm(m, -c);
  return out;
}

CoeffPolynomial CoeffPolynomial::operator-() const {
  CoeffPolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

CoeffPolynomial CoeffPolynomial::operator*(const CoeffPolynomial& o) const {
  CoeffPolynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      for (std::size_t v = 0; v < 4; ++v)
        m.e[v] = static_cast<std::uint8_t>(ma.e[v] + mb.e[v]);
      out.addTerm(m, ca * cb);
    }
  }
  return out;
}

CoeffPolynomial CoeffPolynomial::operator/(const CoeffPolynomial& o) const {
  if (!o.isConstant() || o.isZero())
    throw NotInvertibleError("polynomial division requires a nonzero constant divisor");
  return scaled(Rational(1) / o.constantValue());
}

CoeffPolynomial CoeffPolynomial::scaled(const Rational& r) const {
  CoeffPolynomial out;
  if (r == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * r);
  return out;
}

CoeffPolynomial CoeffPolynomial::pow(int exponent) const {
  if (exponent < 0) throw ArgumentError("negative polynomial power");
  CoeffPolynomial out(1);
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

std::complex<double> CoeffPolynomial::eval(
    const std::array<std::complex<double>, 4>& c) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [m, coeff] : terms_) {
    std::complex<double> term{toDouble(coeff), 0.0};
    for (std::size_t v = 0; v < 4; ++v)
      for (int k = 0; k < m.e[v]; ++k) term *= c[v];
    acc += term;
  }
  return acc;
}

namespace {

std::string monomialText(const Monomial& m, bool latexMode) {
  std::string out;
  for (std::size_t v = 0; v < 4; ++v) {
    if (m.e[v] == 0) continue;
    if (latexMode) {
      out += "c_{" + std::to_string(v + 1) + "}";
      if (m.e[v] > 1) out += "^{" + std::to_string(m.e[v]) + "}";
    } else {
      if (!out.empty()) out += "*";
      out += "c" + std::to_string(v + 1);
      if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
    }
  }
  return out;
}

std::string coeffText(const Rational& c, bool latexMode) {
  Rational a = absRational(c);
  if (latexMode && denominator(a) != 1)
    return "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
  std::string s = toString(a);
  if (!latexMode && denominator(a) != 1) s = "(" + s + ")";
  return s;
}

// Graded ordering for display: higher total degree last, ties broken by the
// stored lexicographic order, so constants and low-degree terms print first.
std::vector<std::pair<Monomial, Rational>> displayOrder(
    const std::map<Monomial, Rational>& terms) {
  std::vector<std::pair<Monomial, Rational>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.first.totalDegree() < b.first.totalDegree();
  });
  return v;
}

std::string polynomialText(const std::map<Monomial, Rational>& terms, bool latexMode) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : displayOrder(terms)) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomialText(m, latexMode);
    const Rational a = absRational(c);
    if (mono.empty()) {
      out += coeffText(c, latexMode);
    } else if (a == 1) {
      out += mono;
    } else {
      out += coeffText(c, latexMode);
      if (!latexMode) out += "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace

std::string CoeffPolynomial::str() const { return polynomialText(terms_, false); }

std::string CoeffPolynomial::latex() const { return polynomialText(terms_, true); }

CompiledPoly::CompiledPoly(const CoeffPolynomial& p) {
  terms_.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    terms_.push_back({toDouble(c), m.e});
    for (std::size_t v = 0; v < 4; ++v) maxExp_[v] = std::max(maxExp_[v], int(m.e[v]));
  }
}

std::complex<double> CompiledPoly::eval(
    const std::array<std::complex<double>, 4>& c) const {
  // Power tables keep the hot loop at one multiply per variable per term.
  std::array<std::array<std::complex<double>, 8>, 4> pow;
  for (std::size_t v = 0; v < 4; ++v) {
    pow[v][0] = {1.0, 0.0};
    for (int k = 1; k <= maxExp_[v]; ++k) pow[v][k] = pow[v][k - 1] * c[v];
  }
  std::complex<double> acc{0.0, 0.0};
  for (const Term& t : terms_) {
    std::complex<double> term = pow[0][t.e[0]] * pow[1][t.e[1]];
    term *= pow[2][t.e[2]];
    term *= pow[3][t.e[3]];
    acc += t.coeff * term;
  }
  return acc;
}

}  // namespace hankel
