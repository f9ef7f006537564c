// Acceptance suite: every release-gating criterion, one pass/fail line each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hankel/bound_engine.hpp"
#include "hankel/report_io.hpp"
#include "hankel/search.hpp"
#include "hankel/verify.hpp"

using namespace hankel;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body,
               double maxSeconds = 0.0) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (maxSeconds > 0.0 && seconds > maxSeconds) {
    ok = false;
    error += (error.empty() ? "" : "; ") + std::string("runtime ") +
             std::to_string(seconds) + "s exceeds " + std::to_string(maxSeconds) + "s";
  }
  if (!ok) ++failures;
  std::printf("%s  criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), seconds, error.empty() ? "" : " -- ", error.c_str());
  std::fflush(stdout);
}

bool expectExact(const CoeffPolynomial& actual, const CoeffPolynomial& expected) {
  return actual == expected;
}

const CoeffPolynomial c1 = CoeffPolynomial::variable(1);
const CoeffPolynomial c2 = CoeffPolynomial::variable(2);
const CoeffPolynomial c3 = CoeffPolynomial::variable(3);
const CoeffPolynomial c4 = CoeffPolynomial::variable(4);

Rational q(long long n, long long d = 1) { return Rational(n, d); }

bool coefficientDerivations() {
  bool ok = true;
  {
    const auto a = deriveCoefficients(ClassId::Starlike, 5);
    ok = ok && expectExact(a[0], c1.scaled(q(2)));
    ok = ok && expectExact(a[1], c2 + c1.pow(2).scaled(q(3)));
    ok = ok && expectExact(a[2], (c3 + (c1 * c2).scaled(q(5)) + c1.pow(3).scaled(q(6)))
                                     .scaled(q(2, 3)));
    ok = ok && expectExact(a[3], (c4 + (c1 * c3).scaled(q(14, 3)) +
                                  (c1.pow(2) * c2).scaled(q(43, 3)) +
                                  c2.pow(2).scaled(q(2)) + c1.pow(4).scaled(q(10)))
                                     .scaled(q(1, 2)));
  }
  {
    const auto a = deriveCoefficients(ClassId::SymmetricPoints, 5);
    ok = ok && expectExact(a[0], c1);
    ok = ok && expectExact(a[1], c2 + c1.pow(2));
    ok = ok && expectExact(a[2], (c3 + (c1 * c2).scaled(q(3)) + c1.pow(3).scaled(q(2)))
                                     .scaled(q(1, 2)));
    ok = ok && expectExact(a[3], (c4 + (c1 * c3).scaled(q(2)) +
                                  (c1.pow(2) * c2).scaled(q(5)) + c2.pow(2).scaled(q(2)) +
                                  c1.pow(4).scaled(q(2)))
                                     .scaled(q(1, 2)));
  }
  {
    const auto a = deriveCoefficients(ClassId::Exponential, 5);
    ok = ok && expectExact(a[0], c1);
    ok = ok && expectExact(a[1], c2.scaled(q(1, 2)) + c1.pow(2).scaled(q(3, 4)));
    ok = ok && expectExact(a[2], (c3 + (c1 * c2).scaled(q(5, 2)) +
                                  c1.pow(3).scaled(q(17, 12)))
                                     .scaled(q(1, 3)));
    ok = ok && expectExact(a[3], (c4 + (c1 * c3).scaled(q(7, 3)) +
                                  (c1.pow(2) * c2).scaled(q(10, 3)) + c2.pow(2) +
                                  c1.pow(4).scaled(q(19, 18)))
                                     .scaled(q(1, 4)));
  }
  {
    const auto a = deriveCoefficients(ClassId::Lune, 5);
    ok = ok && expectExact(a[0], c1);
    ok = ok && expectExact(a[1], c2.scaled(q(1, 2)) + c1.pow(2).scaled(q(3, 4)));
    ok = ok && expectExact(a[2], (c3 + (c1 * c2).scaled(q(5, 2)) +
                                  c1.pow(3).scaled(q(5, 4)))
                                     .scaled(q(1, 3)));
    ok = ok && expectExact(a[3], (c4 + (c1 * c3).scaled(q(7, 3)) +
                                  (c1.pow(2) * c2).scaled(q(17, 6)) + c2.pow(2) +
                                  c1.pow(4).scaled(q(2, 3)))
                                     .scaled(q(1, 4)));
  }
  return ok;
}

bool groupedIdentities() {
  bool ok = true;
  for (ClassId id : kAllClasses) {
    const HankelExpression& e = hankel3Polynomial(id);  // throws on mismatch
    ok = ok && (e.groupedForm.expand() == e.byClass);
    if (e.rawDisplay) ok = ok && (*e.rawDisplay == e.byClass);
  }
  // the ungrouped exponential display, including its c1^6 term
  Monomial c1to6;
  c1to6.e = {6, 0, 0, 0};
  ok = ok && hankel3Polynomial(ClassId::Exponential).rawDisplay.has_value();
  ok = ok && (hankel3Polynomial(ClassId::Exponential).byClass.coefficient(c1to6) ==
              q(-13, 5184));
  return ok;
}

bool boundReproduction() {
  const BoundReport star = boundStarlike();
  const BoundReport sym = boundSymmetricPoints();
  const BoundReport expo = boundExponential();
  const BoundReport lune = boundLune();
  bool ok = std::abs(star.upperBound - 0.777987) < 1e-5;
  ok = ok && std::abs(sym.upperBound - (0.25 + 1.0 / (3.0 * std::sqrt(3.0)))) < 1e-12;
  ok = ok && expo.exactBound && *expo.exactBound == q(17, 72) &&
       expo.upperBound == toDouble(q(17, 72));
  ok = ok && lune.exactBound && *lune.exactBound == q(17, 72) &&
       lune.upperBound == toDouble(q(17, 72));
  return ok;
}

bool optimizerMilestones() {
  OptimizerEvidence ev;
  certifiedMaxOnOmega(starlikeSurface(), OmegaDomain{}, &ev);
  bool ok = ev.interior.interior.empty();

  bool sawRejection = false;
  for (const RejectedCandidate& r : ev.interior.rejected) {
    if (std::abs(r.x - 0.94567) < 1e-4 && std::abs(r.y - 0.1541) < 1e-4) {
      sawRejection = true;
      ok = ok && r.reason.find("exceeds 1 - x^2") != std::string::npos;
    }
  }
  ok = ok && sawRejection;

  double vx0 = 0, vx1 = 0, vy0 = 0, vpar = 0, apar = 0;
  for (const EdgeMax& e : ev.edges) {
    if (e.edge == "x=0") vx0 = e.value;
    if (e.edge == "x=1") vx1 = e.value;
    if (e.edge == "y=0") vy0 = e.value;
    if (e.edge == "y=1-x^2") {
      vpar = e.value;
      apar = e.argmax;
    }
  }
  ok = ok && std::abs(vx0 - 2.0 * std::sqrt(3.0)) < 1e-9;
  ok = ok && std::abs(vx1 - 6.0) < 1e-12;
  ok = ok && std::abs(vy0 - 6.0) < 1e-12;
  ok = ok && std::abs(vpar - 6.00376) < 1e-4;
  ok = ok && std::abs(apar - 0.948542) < 1e-5;
  return ok;
}

bool lemmaSoundness() {
  const LemmaSoundnessReport r = runLemmaSoundness(100000, 20250807, 1e-9, 1e-12);
  return r.violations.empty() && r.samples == 100000;
}

bool boundSoundness() {
  const BoundSoundnessReport r = runBoundSoundness(1000000, 20250808);
  bool ok = r.violations.empty();
  for (ClassId id : kAllClasses) {
    const std::size_t k = static_cast<std::size_t>(id);
    ok = ok && r.maxObserved[k] <= r.upperBounds[k];
  }
  return ok;
}

bool regionClassifier() {
  const auto is = [](const RegionVerdict& v, Region region, double phi) {
    return v.region == region && v.phi && *v.phi == phi;
  };
  bool ok = is(classifyRegionExact(q(-5, 4), q(0)), Region::D2, 1.0);
  ok = ok && is(classifyRegionExact(q(1, 2), q(0)), Region::D1, 1.0);
  const RegionVerdict minusOne = classifyRegionExact(q(-1), q(0));
  ok = ok && minusOne.covered() && minusOne.phi && *minusOne.phi == 1.0;
  ok = ok && is(classifyRegionExact(q(-15, 16), q(0)), Region::D2, 1.0);
  ok = ok && is(classifyRegionExact(q(13, 34), q(-13, 204)), Region::D1, 1.0);
  ok = ok && is(classifyRegionExact(q(5, 11), q(-7, 44)), Region::D1, 1.0);
  ok = ok && is(classifyRegionExact(q(-5, 16), q(0)), Region::D1, 1.0);
  // double-precision entry point agrees
  ok = ok && classifyRegion(-1.25, 0.0).region == Region::D2;
  return ok;
}

bool searchReproducibilityAndGap() {
  bool ok = true;
  std::vector<SearchResult> results;
  for (ClassId id : kAllClasses) {
    SearchConfig cfg;
    cfg.classId = id;
    cfg.budget = 20000;
    cfg.refineIters = 100;
    cfg.seed = 424242;
    const SearchResult a = search(cfg);
    const SearchResult b = search(cfg);
    ok = ok && (a == b);  // bit-level reproducibility, witness and history included
    ok = ok && a.bestValue <= a.classUpperBound;
    results.push_back(a);
  }
  const auto rows = gapReport(results);
  ok = ok && rows.size() == 4;
  for (const GapRow& row : rows) {
    ok = ok && row.lowerBound <= row.upperBound;
    if (row.classId == ClassId::SymmetricPoints)
      ok = ok && row.priorBound && *row.priorBound == 2.5;
    else if (row.classId == ClassId::Exponential)
      ok = ok && row.priorBound && *row.priorBound == 0.50047781;
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "coefficient derivations are exact", coefficientDerivations, 1.0);
  criterion(2, "grouped decompositions expand exactly", groupedIdentities);
  criterion(3, "certified bounds match the reference values", boundReproduction, 10.0);
  criterion(4, "optimizer milestones on Omega", optimizerMilestones);
  criterion(5, "lemma soundness on 1e5 Schur samples", lemmaSoundness, 30.0);
  criterion(6, "bound soundness on 1e6 samples per class", boundSoundness, 120.0);
  criterion(7, "region classifier pins", regionClassifier);
  criterion(8, "search reproducibility and gap table", searchReproducibilityAndGap);

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
