#include "hankel/class_models.hpp"

#include <mutex>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

constexpr std::array<ClassSpec, 4> kSpecs = {{
    {ClassId::Starlike, "starlike", "z f'(z) (1 - w(z)) = f(z) (1 + w(z))"},
    {ClassId::SymmetricPoints, "symmetric",
     "2 z f'(z) (1 - w(z)) = (f(z) - f(-z)) (1 + w(z))"},
    {ClassId::Exponential, "exponential", "z f'(z) = f(z) exp(w(z))"},
    {ClassId::Lune, "lune", "z f'(z) = f(z) (w(z) + sqrt(1 + w(z)^2))"},
}};

std::size_t classIndex(ClassId id) { return static_cast<std::size_t>(id); }

PolySeries omegaSeries() {
  // w(z) = c1 z + ... + c4 z^4; the z^5 coefficient never reaches the
  // residual orders we read because f has no constant term.
  PolySeries w(kDerivationOrder);
  for (int k = 1; k <= 4; ++k) w.set(k, CoeffPolynomial::variable(k));
  return w;
}

PolySeries fSeries(const std::vector<CoeffPolynomial>& known, int probeIndex,
                   const CoeffPolynomial& probeValue) {
  PolySeries f(kDerivationOrder);
  f.set(1, CoeffPolynomial(1));
  for (std::size_t j = 0; j < known.size(); ++j) f.set(static_cast<int>(j) + 2, known[j]);
  if (probeIndex >= 2) f.set(probeIndex, probeValue);
  return f;
}

}  // namespace

const ClassSpec& classSpec(ClassId id) { return kSpecs[classIndex(id)]; }

std::optional<ClassId> parseClassId(std::string_view token) {
  for (const ClassSpec& s : kSpecs)
    if (s.name == token) return s.id;
  return std::nullopt;
}

PolySeries relationResidual(ClassId id, const PolySeries& f, const PolySeries& omega) {
  const PolySeries one = PolySeries::constant(CoeffPolynomial(1), f.order());
  const PolySeries zfp = zTimesDerivative(f);
  switch (id) {
    case ClassId::Starlike:
      return zfp * (one - omega) - f * (one + omega);
    case ClassId::SymmetricPoints:
      return zfp.scaled(CoeffPolynomial(2)) * (one - omega) -
             (f - negateArgument(f)) * (one + omega);
    case ClassId::Exponential:
      return zfp - f * expSeries(omega);
    case ClassId::Lune:
      return zfp - f * (omega + sqrt1p(omega * omega));
  }
  throw ArgumentError("unknown class id");
}

std::vector<CoeffPolynomial> deriveCoefficients(ClassId id, int upToIndex) {
  if (upToIndex < 2 || upToIndex > kDerivationOrder)
    throw ArgumentError("upToIndex must be in 2..5");
  const PolySeries omega = omegaSeries();
  std::vector<CoeffPolynomial> known;
  for (int k = 2; k <= upToIndex; ++k) {
    // The order-k residual coefficient is affine in a_k: probe at 0 and 1.
    const CoeffPolynomial r0 =
        relationResidual(id, fSeries(known, k, CoeffPolynomial(0)), omega)[k];
    const CoeffPolynomial r1 =
        relationResidual(id, fSeries(known, k, CoeffPolynomial(1)), omega)[k];
    const CoeffPolynomial pivot = r1 - r0;
    if (!pivot.isConstant() || pivot.isZero())
      throw DerivationError("degenerate linear solve at coefficient index " +
                            std::to_string(k) + " for class " +
                            std::string(classSpec(id).name));
    known.push_back(r0.scaled(Rational(-1) / pivot.constantValue()));
  }
  return known;
}

CoeffPolynomial GroupedForm::expand() const {
  CoeffPolynomial acc;
  for (const GroupedTerm& t : terms) acc = acc + t.base.pow(t.power).scaled(t.coeff);
  return acc.scaled(prefactor);
}

std::complex<double> GroupedForm::eval(
    const std::array<std::complex<double>, 4>& c) const {
  std::complex<double> acc{0.0, 0.0};
  for (const GroupedTerm& t : terms) {
    std::complex<double> b = t.base.eval(c);
    std::complex<double> p{1.0, 0.0};
    for (int i = 0; i < t.power; ++i) p *= b;
    acc += toDouble(t.coeff) * p;
  }
  return toDouble(prefactor) * acc;
}

namespace {

Rational frac(long long n, long long d) { return Rational(n, d); }

HankelExpression buildExpression(ClassId id) {
  const CoeffPolynomial c1 = CoeffPolynomial::variable(1);
  const CoeffPolynomial c2 = CoeffPolynomial::variable(2);
  const CoeffPolynomial c3 = CoeffPolynomial::variable(3);
  const CoeffPolynomial c4 = CoeffPolynomial::variable(4);

  const std::vector<CoeffPolynomial> a = deriveCoefficients(id, 5);
  const CoeffPolynomial &a2 = a[0], &a3 = a[1], &a4 = a[2], &a5 = a[3];

  HankelExpression expr;
  expr.classId = id;
  expr.byClass = a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2);

  switch (id) {
    case ClassId::Starlike:
      expr.groupedForm.prefactor = frac(1, 18);
      expr.groupedForm.terms = {
          {frac(-8, 1), c3 - frac(5, 8) * (c1 * c2), 2},
          {frac(-63, 8), c1 * c2, 2},
          {frac(6, 1), c1.pow(3) * (c3 + frac(1, 2) * (c1 * c2)), 1},
          {frac(9, 1), (c2 - c1 * c1) * c4, 1},
      };
      expr.displayNote =
          "first grouped term is -8(c3 - (5/8) c1 c2)^2; an often-quoted display "
          "with inner coefficient 5/4 and no square does not expand to the "
          "determinant substitution";
      break;
    case ClassId::SymmetricPoints:
      expr.groupedForm.prefactor = frac(1, 4);
      expr.groupedForm.terms = {
          {frac(-1, 1), c3 - c1 * c2, 2},
          {frac(2, 1), c1 * c2, 2},
          {frac(2, 1), c2 * c4, 1},
      };
      expr.rawDisplay = (-(c3 * c3) + frac(2, 1) * (c1 * c2 * c3) + (c1 * c2).pow(2) +
                         frac(2, 1) * (c2 * c4))
                            .scaled(frac(1, 4));
      break;
    case ClassId::Exponential:
      expr.groupedForm.prefactor = frac(1, 1);
      expr.groupedForm.terms = {
          {frac(-1, 9), c3 - frac(5, 16) * (c1 * c2), 2},
          {frac(-15, 256), c1 * c2, 2},
          {frac(17, 432),
           c1.pow(3) * (c3 + frac(13, 34) * (c1 * c2) - frac(13, 204) * c1.pow(3)), 1},
          {frac(1, 16), (frac(2, 1) * c2 - c1 * c1) * c4, 1},
      };
      expr.rawDisplay = frac(5, 72) * (c1 * c2 * c3) - frac(5, 72) * (c1 * c2).pow(2) +
                        frac(13, 864) * (c1.pow(4) * c2) + frac(17, 432) * (c1.pow(3) * c3) -
                        frac(1, 9) * (c3 * c3) - frac(13, 5184) * c1.pow(6) +
                        frac(1, 16) * ((frac(2, 1) * c2 - c1 * c1) * c4);
      expr.displayNote =
          "grouped inner coefficient is 5/16, consistent with the region "
          "invocation at (-5/16, 0); a variant quoting 15/16 does not expand to "
          "the determinant substitution";
      break;
    case ClassId::Lune:
      expr.groupedForm.prefactor = frac(1, 1);
      expr.groupedForm.terms = {
          {frac(-1, 9), c3 - frac(5, 16) * (c1 * c2), 2},
          {frac(-31, 256), c1 * c2, 2},
          {frac(11, 144),
           c1.pow(3) * (c3 + frac(5, 11) * (c1 * c2) - frac(7, 44) * c1.pow(3)), 1},
          {frac(1, 8), (c2 - frac(1, 2) * (c1 * c1)) * c4, 1},
      };
      break;
  }

  if (expr.byClass.totalDegree() > 6)
    throw SymbolicInconsistencyError("H3(1) polynomial exceeds total degree 6 for class " +
                                     std::string(classSpec(id).name));
  if (!(expr.groupedForm.expand() == expr.byClass))
    throw SymbolicInconsistencyError("grouped decomposition does not expand to the "
                                     "determinant substitution for class " +
                                     std::string(classSpec(id).name));
  if (expr.rawDisplay && !(*expr.rawDisplay == expr.byClass))
    throw SymbolicInconsistencyError("raw display does not equal the determinant "
                                     "substitution for class " +
                                     std::string(classSpec(id).name));
  return expr;
}

const std::array<HankelExpression, 4>& expressionTable() {
  static const std::array<HankelExpression, 4> table = {
      buildExpression(ClassId::Starlike),
      buildExpression(ClassId::SymmetricPoints),
      buildExpression(ClassId::Exponential),
      buildExpression(ClassId::Lune),
  };
  return table;
}

}  // namespace

const HankelExpression& hankel3Polynomial(ClassId id) {
  return expressionTable()[classIndex(id)];
}

std::complex<double> evalHankel3(ClassId id, const std::array<std::complex<double>, 4>& c) {
  static const std::array<CompiledPoly, 4> compiled = {
      CompiledPoly(hankel3Polynomial(ClassId::Starlike).byClass),
      CompiledPoly(hankel3Polynomial(ClassId::SymmetricPoints).byClass),
      CompiledPoly(hankel3Polynomial(ClassId::Exponential).byClass),
      CompiledPoly(hankel3Polynomial(ClassId::Lune).byClass),
  };
  return compiled[classIndex(id)].eval(c);
}

std::complex<double> evalHankel3ViaCoefficients(
    ClassId id, const std::array<std::complex<double>, 4>& c) {
  static const auto compiled = [] {
    std::array<std::array<CompiledPoly, 4>, 4> t;
    for (ClassId id : kAllClasses) {
      const auto a = deriveCoefficients(id, 5);
      for (std::size_t j = 0; j < 4; ++j) t[classIndex(id)][j] = CompiledPoly(a[j]);
    }
    return t;
  }();
  const auto& ak = compiled[classIndex(id)];
  const std::complex<double> a2 = ak[0].eval(c), a3 = ak[1].eval(c), a4 = ak[2].eval(c),
                             a5 = ak[3].eval(c);
  return a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2);
}

std::complex<double> evalHankel3ViaGrouped(ClassId id,
                                           const std::array<std::complex<double>, 4>& c) {
  return hankel3Polynomial(id).groupedForm.eval(c);
}

}  // namespace hankel
