#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hankel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double toDouble(const Rational& r) { return r.convert_to<double>(); }

/// "p/q" for non-integers, plain "p" otherwise.
inline std::string toString(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline int sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

inline Rational absRational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace hankel
