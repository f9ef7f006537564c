#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hankel/coeff_polynomial.hpp"
#include "hankel/series.hpp"

namespace hankel {

/// The four function classes handled by the pipeline. Each is defined by a
/// subordination of zf'/f (or its symmetric-points analogue) to a fixed
/// target on the unit disk.
enum class ClassId { Starlike, SymmetricPoints, Exponential, Lune };

inline constexpr std::array<ClassId, 4> kAllClasses = {
    ClassId::Starlike, ClassId::SymmetricPoints, ClassId::Exponential, ClassId::Lune};

struct ClassSpec {
  ClassId id;
  std::string_view name;      // CLI token
  std::string_view relation;  // defining functional equation, human-readable
};

const ClassSpec& classSpec(ClassId id);
std::optional<ClassId> parseClassId(std::string_view token);

/// Series truncation order used for the coefficient derivation (enough for a5).
inline constexpr int kDerivationOrder = 5;
/// Schwarz series order: only c1..c4 enter H3(1).
inline constexpr int kSchwarzOrder = 4;

using PolySeries = TruncatedSeries<CoeffPolynomial>;

/// LHS - RHS of the class relation for a given f and omega, as a series whose
/// coefficients live in Q[c1..c4].
PolySeries relationResidual(ClassId id, const PolySeries& f, const PolySeries& omega);

/// a2..a_upToIndex as exact polynomials in c1..c4, obtained by solving the
/// class relation order by order. upToIndex in 2..5.
std::vector<CoeffPolynomial> deriveCoefficients(ClassId id, int upToIndex);

/// One term coeff * base^power of a grouped decomposition.
struct GroupedTerm {
  Rational coeff;
  CoeffPolynomial base;
  int power = 1;
};

/// Structured sum prefactor * sum_i coeff_i * base_i^power_i.
struct GroupedForm {
  Rational prefactor;
  std::vector<GroupedTerm> terms;

  CoeffPolynomial expand() const;
  std::complex<double> eval(const std::array<std::complex<double>, 4>& c) const;
};

struct HankelExpression {
  ClassId classId;
  /// H3(1) after substituting the derived a2..a5 into the determinant.
  CoeffPolynomial byClass;
  /// Grouped decomposition whose expansion equals byClass exactly.
  GroupedForm groupedForm;
  /// Ungrouped display, where one exists; also equals byClass exactly.
  std::optional<CoeffPolynomial> rawDisplay;
  /// Commentary on display corrections applied to make the identity exact.
  std::string displayNote;
};

/// Cached per class; construction verifies the grouped-form identity and
/// throws SymbolicInconsistencyError on mismatch.
const HankelExpression& hankel3Polynomial(ClassId id);

/// H3(1) at a concrete Schwarz coefficient vector (determinant-substitution
/// polynomial, compiled).
std::complex<double> evalHankel3(ClassId id, const std::array<std::complex<double>, 4>& c);

/// Independent route: evaluate the derived a2..a5 at c, then the determinant.
std::complex<double> evalHankel3ViaCoefficients(ClassId id,
                                                const std::array<std::complex<double>, 4>& c);

/// Independent route: evaluate the grouped decomposition term by term.
std::complex<double> evalHankel3ViaGrouped(ClassId id,
                                           const std::array<std::complex<double>, 4>& c);

}  // namespace hankel
