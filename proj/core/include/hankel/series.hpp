#pragma once

#include <initializer_list>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel {

/// Degree-capped power series with coefficients in a commutative Q-algebra.
///
/// The truncation order is explicit: every operation produces a series of the
/// same order and never reads or writes coefficients beyond it. Scalars must
/// support +, -, *, /, construction from int and equality; exact rationals,
/// std::complex<double> and CoeffPolynomial all qualify.
template <typename T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, T(0)) {
    if (order < 0) throw ArgumentError("series order must be >= 0");
  }

  TruncatedSeries(std::initializer_list<T> coeffs) : coeffs_(coeffs) {
    if (coeffs_.empty()) throw ArgumentError("series needs at least the constant term");
  }

  static TruncatedSeries constant(T value, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(value);
    return s;
  }

  /// The series z (zero if order is 0).
  static TruncatedSeries identity(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = T(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const T& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  void set(int k, T value) { coeffs_.at(static_cast<std::size_t>(k)) = std::move(value); }

  bool isZero() const {
    for (const T& c : coeffs_)
      if (!(c == T(0))) return false;
    return true;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    requireSameOrder(a, b, "add");
    TruncatedSeries out(a.order());
    for (int k = 0; k <= a.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    requireSameOrder(a, b, "subtract");
    TruncatedSeries out(a.order());
    for (int k = 0; k <= a.order(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return out;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries out(order());
    for (int k = 0; k <= order(); ++k) out.coeffs_[k] = T(0) - coeffs_[k];
    return out;
  }

  /// Cauchy product, truncated at the shared order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    requireSameOrder(a, b, "multiply");
    TruncatedSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (int j = 0; i + j <= a.order(); ++j)
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  TruncatedSeries scaled(const T& factor) const {
    TruncatedSeries out(order());
    for (int k = 0; k <= order(); ++k) out.coeffs_[k] = coeffs_[k] * factor;
    return out;
  }

 private:
  static void requireSameOrder(const TruncatedSeries& a, const TruncatedSeries& b,
                               const char* what) {
    if (a.order() != b.order())
      throw OrderMismatchError(std::string("series order mismatch in ") + what);
  }

  std::vector<T> coeffs_;
};

template <typename T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return a + b;
}

template <typename T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return a * b;
}

/// b with a*b == 1 up to the truncation order; requires an invertible constant
/// term.
template <typename T>
TruncatedSeries<T> reciprocal(const TruncatedSeries<T>& a) {
  if (a[0] == T(0)) throw NotInvertibleError("reciprocal: zero constant term");
  const int n = a.order();
  TruncatedSeries<T> out(n);
  const T inv0 = T(1) / a[0];
  out.set(0, inv0);
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    for (int i = 1; i <= k; ++i) acc = acc + a[i] * out[k - i];
    out.set(k, T(0) - acc * inv0);
  }
  return out;
}

/// outer(inner(z)) truncated; inner must vanish at 0 so the result depends
/// only on the retained coefficients.
template <typename T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner) {
  if (outer.order() != inner.order())
    throw OrderMismatchError("series order mismatch in compose");
  if (!(inner[0] == T(0)))
    throw CompositionDomainError("compose: inner constant term must be zero");
  const int n = outer.order();
  // Horner in the inner series.
  TruncatedSeries<T> result = TruncatedSeries<T>::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    result = result * inner;
    result.set(0, result[0] + outer[k]);
  }
  return result;
}

/// Coefficient k multiplied by (-1)^k, i.e. s(-z).
template <typename T>
TruncatedSeries<T> negateArgument(const TruncatedSeries<T>& a) {
  TruncatedSeries<T> out(a.order());
  for (int k = 0; k <= a.order(); ++k) out.set(k, (k % 2 == 0) ? a[k] : T(0) - a[k]);
  return out;
}

/// s with s^2 == 1 + a up to the order and s(0) = 1; a must vanish at 0.
/// Coefficient recurrence: 2 s_k = a_k - sum_{i=1}^{k-1} s_i s_{k-i}.
template <typename T>
TruncatedSeries<T> sqrt1p(const TruncatedSeries<T>& a) {
  if (!(a[0] == T(0))) throw ArgumentError("sqrt1p: argument must have zero constant term");
  const int n = a.order();
  TruncatedSeries<T> out(n);
  out.set(0, T(1));
  for (int k = 1; k <= n; ++k) {
    T acc = a[k];
    for (int i = 1; i < k; ++i) acc = acc - out[i] * out[k - i];
    out.set(k, acc / T(2));
  }
  return out;
}

/// exp(a) truncated; a must vanish at 0.
/// From e' = a' e: k e_k = sum_{j=1}^{k} j a_j e_{k-j}.
template <typename T>
TruncatedSeries<T> expSeries(const TruncatedSeries<T>& a) {
  if (!(a[0] == T(0))) throw ArgumentError("expSeries: argument must have zero constant term");
  const int n = a.order();
  TruncatedSeries<T> out(n);
  out.set(0, T(1));
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    for (int j = 1; j <= k; ++j) acc = acc + T(j) * a[j] * out[k - j];
    out.set(k, acc / T(k));
  }
  return out;
}

/// z * d/dz: coefficient k becomes k * a_k.
template <typename T>
TruncatedSeries<T> zTimesDerivative(const TruncatedSeries<T>& a) {
  TruncatedSeries<T> out(a.order());
  for (int k = 1; k <= a.order(); ++k) out.set(k, T(k) * a[k]);
  return out;
}

}  // namespace hankel
