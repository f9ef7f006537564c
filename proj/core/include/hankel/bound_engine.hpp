#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel/bivariate.hpp"
#include "hankel/class_models.hpp"
#include "hankel/schwarz.hpp"
#include "hankel/univariate.hpp"

namespace hankel {

/// g(y) = 2 sqrt((1 - 3y^2) / (4 + y)): the positive branch of dh/dy = 0 for
/// the starlike reduction surface. Absent when 1 - 3y^2 < 0. y must be in [0,1].
std::optional<double> criticalCurve(double y);

struct CriticalPoint {
  double x;
  double y;
  double value;
};

struct RejectedCandidate {
  double x;
  double y;
  std::string reason;
};

struct InteriorSweep {
  std::vector<CriticalPoint> interior;      // strictly inside the domain
  std::vector<RejectedCandidate> rejected;  // stationary candidates that fell outside
};

/// Simultaneous zeros of dh/dx and dh/dy strictly inside Omega. Candidates are
/// found by exact elimination along the critical curve of dh/dy (supported for
/// dh/dy of x-degree <= 2 with no linear x term, which covers every surface
/// this pipeline maximizes) and cross-checked against a dense Newton sweep;
/// a disagreement throws NumericFailureError.
InteriorSweep interiorCriticalPoints(const BivariatePoly& h, const OmegaDomain& domain);

struct EdgeMax {
  std::string edge;  // "x=0", "x=1", "y=0", "y=1-x^2"
  double argmax;     // position along the edge parameter
  double value;
};

/// Maxima of the four univariate edge restrictions on [0,1], via exact
/// derivative root isolation plus endpoint evaluation.
std::vector<EdgeMax> boundaryMaxima(const BivariatePoly& h, const OmegaDomain& domain);

enum class Verification { ExactSign, GridCertified };

const char* verificationName(Verification v);

struct InequalityStep {
  std::string description;
  std::string dominating;  // the expression that dominates after this step
  Verification verification = Verification::ExactSign;
  bool pass = false;
};

struct LemmaInvocation {
  Rational mu;
  Rational nu;
  RegionVerdict verdict;
  std::string boundExpr;  // the |c3 + mu c1 c2 + nu c1^3| instance bounded
  std::string note;       // display discrepancies worth surfacing
};

struct GridCertificate {
  int resolution = 0;
  double gridMax = 0.0;
  double slack = 0.0;  // Lipschitz allowance between grid points
};

struct OptimizerEvidence {
  InteriorSweep interior;
  std::vector<EdgeMax> edges;
  double certifiedMax = 0.0;
  GridCertificate grid;
};

struct BoundReport {
  ClassId classId;
  double upperBound = 0.0;
  std::optional<Rational> exactBound;  // set when the bound is a rational
  std::string closedForm;              // e.g. "17/72" or "1/4 + 1/(3*sqrt(3))"
  std::vector<InequalityStep> steps;
  std::vector<LemmaInvocation> lemmas;
  std::optional<OptimizerEvidence> optimizer;  // starlike only
};

/// h(x, y) = -(9/8)x^2y^2 - 9x^2y + 9x^2 + 6x^3 - 9x^4 + 9y - 9y^3, the
/// surface whose maximum over Omega drives the starlike bound.
const BivariatePoly& starlikeSurface();

/// Certified maximum over Omega: interior sweep plus boundary maxima, with a
/// grid-plus-Lipschitz cross check recorded in the evidence.
double certifiedMaxOnOmega(const BivariatePoly& h, const OmegaDomain& domain,
                           OptimizerEvidence* evidence);

BoundReport boundStarlike();
BoundReport boundSymmetricPoints();
BoundReport boundExponential();
BoundReport boundLune();

/// Cached dispatch over the four pipelines.
const BoundReport& boundForClass(ClassId id);

/// Values of the successive dominating expressions of the class's inequality
/// chain at a concrete sample, |H3| first and the final bound last. Each entry
/// must dominate the previous one (up to round-off) for genuine Schwarz samples.
std::vector<double> boundChainValues(ClassId id, const SchwarzSample& s);

}  // namespace hankel
