#include "hankel/univariate.hpp"

#include <algorithm>
#include <sstream>

#include "hankel/errors.hpp"

namespace hankel {

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  trim();
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPoly RationalPoly::constant(Rational c) {
  return RationalPoly(std::vector<Rational>{std::move(c)});
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPoly::leading() const {
  if (isZero()) throw ArgumentError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::evalDouble(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + toDouble(*it);
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return RationalPoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * Rational(static_cast<int>(i));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  return *this + (-o);
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (isZero() || o.isZero()) return RationalPoly();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::scaled(const Rational& r) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * r;
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::rem(const RationalPoly& d) const {
  if (d.isZero()) throw ArgumentError("polynomial remainder by zero");
  std::vector<Rational> r = coeffs_;
  const int dd = d.degree();
  while (static_cast<int>(r.size()) - 1 >= dd) {
    const Rational q = r.back() / d.leading();
    const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dd);
    for (int i = 0; i <= dd; ++i)
      r[shift + static_cast<std::size_t>(i)] -= q * d.coeffs()[static_cast<std::size_t>(i)];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::gcd(RationalPoly a, RationalPoly b) {
  while (!b.isZero()) {
    RationalPoly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.isZero()) return a;
  return a.scaled(Rational(1) / a.leading());
}

RationalPoly RationalPoly::squareFreePart() const {
  if (degree() <= 1) return *this;
  const RationalPoly g = gcd(*this, derivative());
  if (g.degree() <= 0) return *this;
  // Exact division: this = q * g with zero remainder by construction.
  std::vector<Rational> r = coeffs_;
  std::vector<Rational> q(coeffs_.size() - static_cast<std::size_t>(g.degree()), Rational(0));
  const int gd = g.degree();
  while (static_cast<int>(r.size()) - 1 >= gd && !r.empty()) {
    const Rational c = r.back() / g.leading();
    const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(gd);
    q[shift] = c;
    for (int i = 0; i <= gd; ++i)
      r[shift + static_cast<std::size_t>(i)] -= c * g.coeffs()[static_cast<std::size_t>(i)];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return RationalPoly(std::move(q));
}

std::string RationalPoly::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = absRational(c);
    if (a != 1 || i == 0) os << toString(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Synthetic division by (t - r); caller guarantees p(r) == 0.
RationalPoly deflateRoot(const RationalPoly& p, const Rational& r) {
  const int n = p.degree();
  std::vector<Rational> q(static_cast<std::size_t>(n), Rational(0));
  Rational carry = p.coeffs()[static_cast<std::size_t>(n)];
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<std::size_t>(k)] = carry;
    carry = p.coeffs()[static_cast<std::size_t>(k)] + r * carry;
  }
  return RationalPoly(std::move(q));
}

std::vector<RationalPoly> sturmChain(const RationalPoly& p) {
  std::vector<RationalPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().isZero() && chain.back().degree() > 0) {
    RationalPoly r = chain[chain.size() - 2].rem(chain.back());
    if (r.isZero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int signVariations(const std::vector<RationalPoly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const RationalPoly& q : chain) {
    const int s = sign(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

std::vector<RootBracket> isolateRealRoots(const RationalPoly& p, const Rational& lo,
                                          const Rational& hi) {
  if (p.isZero()) throw ArgumentError("root isolation of the zero polynomial");
  if (!(lo < hi)) throw ArgumentError("root isolation on a degenerate interval");

  RationalPoly q = p.squareFreePart();
  std::vector<RootBracket> roots;

  // Sturm variation counts assume nonzero endpoint values; peel off exact
  // endpoint roots first (q is square-free, so each appears once).
  if (q.degree() >= 1 && q.eval(lo) == 0) {
    roots.push_back({lo, lo, toDouble(lo)});
    q = deflateRoot(q, lo);
  }
  if (q.degree() >= 1 && q.eval(hi) == 0) {
    roots.push_back({hi, hi, toDouble(hi)});
    q = deflateRoot(q, hi);
  }
  if (q.degree() < 1) {
    std::sort(roots.begin(), roots.end(),
              [](const RootBracket& a, const RootBracket& b) { return a.value < b.value; });
    return roots;
  }

  const std::vector<RationalPoly> chain = sturmChain(q);
  const auto countIn = [&](const Rational& a, const Rational& b) {
    return signVariations(chain, a) - signVariations(chain, b);
  };

  const Rational widthTarget = Rational(1, 10000000000000LL);  // 1e-13

  struct Interval {
    Rational a, b;
    int count;
  };
  std::vector<Interval> work{{lo, hi, countIn(lo, hi)}};
  std::vector<std::pair<Rational, Rational>> isolated;

  int guard = 0;
  while (!work.empty()) {
    if (++guard > 100000)
      throw NumericFailureError("root isolation failed to converge on [" + toString(lo) +
                                ", " + toString(hi) + "]");
    Interval iv = work.back();
    work.pop_back();
    if (iv.count == 0) continue;
    if (iv.count == 1) {
      isolated.emplace_back(iv.a, iv.b);
      continue;
    }
    const Rational mid = (iv.a + iv.b) / 2;
    if (q.eval(mid) == 0) {
      roots.push_back({mid, mid, toDouble(mid)});
      // Shrink around the exact root so both halves exclude it (and only it).
      Rational eps = (iv.b - iv.a) / 1000000;
      while (countIn(mid - eps, mid + eps) > 1) eps /= 1024;
      work.push_back({iv.a, mid - eps, countIn(iv.a, mid - eps)});
      work.push_back({mid + eps, iv.b, countIn(mid + eps, iv.b)});
    } else {
      work.push_back({iv.a, mid, countIn(iv.a, mid)});
      work.push_back({mid, iv.b, countIn(mid, iv.b)});
    }
  }

  // Bisection refinement; Sturm guarantees exactly one simple root per bracket.
  for (auto& [a, b] : isolated) {
    Rational fa = q.eval(a);
    if (fa == 0) {
      roots.push_back({a, a, toDouble(a)});
      continue;
    }
    if (q.eval(b) == 0) {
      roots.push_back({b, b, toDouble(b)});
      continue;
    }
    while (b - a > widthTarget) {
      const Rational mid = (a + b) / 2;
      const Rational fm = q.eval(mid);
      if (fm == 0) {
        a = mid;
        b = mid;
        break;
      }
      if (sign(fm) == sign(fa)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    roots.push_back({a, b, toDouble((a + b) / 2)});
  }

  std::sort(roots.begin(), roots.end(),
            [](const RootBracket& r1, const RootBracket& r2) { return r1.value < r2.value; });
  return roots;
}

}  // namespace hankel
