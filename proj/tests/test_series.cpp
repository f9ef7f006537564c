#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>
#include <random>

#include "doctest.h"
#include "hankel/rational.hpp"
#include "hankel/series.hpp"

using namespace hankel;

using RSeries = TruncatedSeries<Rational>;
using CSeries = TruncatedSeries<std::complex<double>>;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

RSeries randomSeries(std::mt19937_64& rng, int order, bool invertible = false) {
  RSeries s(order);
  for (int k = 0; k <= order; ++k) {
    const long long num = static_cast<long long>(rng() % 19) - 9;
    const long long den = static_cast<long long>(rng() % 9) + 1;
    s.set(k, q(num, den));
  }
  if (invertible && s[0] == q(0)) s.set(0, q(1));
  return s;
}

}  // namespace

TEST_CASE("add: coefficientwise sum with matching orders") {
  CHECK(RSeries{q(1), q(1)} + RSeries{q(1), q(-1)} == RSeries{q(2), q(0)});
  RSeries s{q(3), q(-2), q(5)};
  CHECK(add(s, RSeries(2)) == s);
  CHECK(RSeries{q(0), q(1), q(1)} + RSeries{q(0), q(1), q(-1)} == RSeries{q(0), q(2), q(0)});
  CHECK_THROWS_AS(RSeries(2) + RSeries(3), OrderMismatchError);
}

TEST_CASE("mul: truncated Cauchy product") {
  CHECK(RSeries{q(1), q(1), q(0)} * RSeries{q(1), q(-1), q(0)} ==
        RSeries{q(1), q(0), q(-1)});
  // z * z truncates away at order 1
  CHECK(RSeries{q(0), q(1)} * RSeries{q(0), q(1)} == RSeries{q(0), q(0)});
  const RSeries p{q(1), q(1), q(1)};
  CHECK(p * p == RSeries{q(1), q(2), q(3)});
  CHECK_THROWS_AS(mul(RSeries(2), RSeries(3)), OrderMismatchError);
}

TEST_CASE("reciprocal: geometric series and recurrence") {
  CHECK(reciprocal(RSeries{q(1), q(-1), q(0), q(0)}) == RSeries{q(1), q(1), q(1), q(1)});
  CHECK(reciprocal(RSeries::constant(q(1), 3)) == RSeries::constant(q(1), 3));
  CHECK(reciprocal(RSeries{q(1), q(2), q(0)}) == RSeries{q(1), q(-2), q(4)});
  CHECK_THROWS_AS(reciprocal(RSeries{q(0), q(1)}), NotInvertibleError);
}

TEST_CASE("compose: substitution") {
  // exp series composed with 0 gives 1
  RSeries expz{q(1), q(1), q(1, 2), q(1, 6), q(1, 24)};
  CHECK(compose(expz, RSeries(4)) == RSeries::constant(q(1), 4));

  RSeries omega{q(0), q(2), q(-1), q(1, 3)};
  CHECK(compose(RSeries::identity(3), omega) == omega);

  // 1/(1-w) at w = z^2, truncated at 4: 1 + z^2 + z^4
  RSeries geom{q(1), q(1), q(1), q(1), q(1)};
  RSeries z2(4);
  z2.set(2, q(1));
  CHECK(compose(geom, z2) == RSeries{q(1), q(0), q(1), q(0), q(1)});

  CHECK_THROWS_AS(compose(geom, RSeries::constant(q(1), 4)), CompositionDomainError);
  CHECK_THROWS_AS(compose(geom, RSeries(3)), OrderMismatchError);
}

TEST_CASE("sqrt1p: binomial series and defining property") {
  CHECK(sqrt1p(RSeries(4)) == RSeries::constant(q(1), 4));
  RSeries z2(4);
  z2.set(2, q(1));
  CHECK(sqrt1p(z2) == RSeries{q(1), q(0), q(1, 2), q(0), q(-1, 8)});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    RSeries a = randomSeries(rng, 5);
    a.set(0, q(0));
    const RSeries s = sqrt1p(a);
    RSeries onePlusA = a;
    onePlusA.set(0, q(1));
    CHECK(s * s == onePlusA);
    CHECK(s[0] == q(1));
  }
  CHECK_THROWS_AS(sqrt1p(RSeries::constant(q(1), 3)), ArgumentError);
}

TEST_CASE("expSeries: Taylor coefficients and group law") {
  CHECK(expSeries(RSeries(3)) == RSeries::constant(q(1), 3));
  CHECK(expSeries(RSeries::identity(3)) == RSeries{q(1), q(1), q(1, 2), q(1, 6)});

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    RSeries a = randomSeries(rng, 5);
    a.set(0, q(0));
    CHECK(expSeries(a) * expSeries(-a) == RSeries::constant(q(1), 5));
  }
  CHECK_THROWS_AS(expSeries(RSeries::constant(q(2), 3)), ArgumentError);
}

TEST_CASE("negateArgument: parity") {
  CHECK(negateArgument(RSeries{q(0), q(1), q(1)}) == RSeries{q(0), q(-1), q(1)});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const RSeries s = randomSeries(rng, 5);
    CHECK(negateArgument(negateArgument(s)) == s);
    // s - s(-z) is twice the odd part
    const RSeries odd = s - negateArgument(s);
    for (int k = 0; k <= 5; ++k)
      CHECK(odd[k] == (k % 2 ? q(2) * s[k] : q(0)));
  }
}

TEST_CASE("ring axioms on random rational samples") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const RSeries a = randomSeries(rng, 5);
    const RSeries b = randomSeries(rng, 5);
    const RSeries c = randomSeries(rng, 5);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("reciprocal round-trip on random invertible samples") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const RSeries a = randomSeries(rng, 5, /*invertible=*/true);
    CHECK(a * reciprocal(a) == RSeries::constant(q(1), 5));
  }
}

TEST_CASE("compose is associative for compatible inners") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const RSeries a = randomSeries(rng, 5);
    RSeries b = randomSeries(rng, 5);
    RSeries c = randomSeries(rng, 5);
    b.set(0, q(0));
    c.set(0, q(0));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("complex float mode agrees with rational mode to 1e-12") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const RSeries ra = randomSeries(rng, 5, true);
    const RSeries rb = randomSeries(rng, 5);
    CSeries ca(5), cb(5);
    for (int k = 0; k <= 5; ++k) {
      ca.set(k, {toDouble(ra[k]), 0.0});
      cb.set(k, {toDouble(rb[k]), 0.0});
    }
    const RSeries rprod = ra * rb;
    const CSeries cprod = ca * cb;
    const CSeries crec = reciprocal(ca);
    const RSeries rrec = reciprocal(ra);
    for (int k = 0; k <= 5; ++k) {
      CHECK(std::abs(cprod[k] - std::complex<double>(toDouble(rprod[k]), 0.0)) < 1e-12);
      CHECK(std::abs(crec[k] - std::complex<double>(toDouble(rrec[k]), 0.0)) <
            1e-9 * (1.0 + std::abs(crec[k])));
    }
  }
}
