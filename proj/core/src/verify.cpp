#include "hankel/verify.hpp"

#include <cmath>
#include <limits>

#include "hankel/bound_engine.hpp"
#include "hankel/errors.hpp"

namespace hankel {

const std::vector<std::pair<Rational, Rational>>& lemmaInvocationPairs() {
  static const std::vector<std::pair<Rational, Rational>> pairs = {
      {Rational(-5, 8), Rational(0)},        // starlike, first grouped term
      {Rational(-5, 4), Rational(0)},        // starlike display variant
      {Rational(1, 2), Rational(0)},         // starlike, second grouped term
      {Rational(-1), Rational(0)},           // symmetric points
      {Rational(-5, 16), Rational(0)},       // exponential and lune, first term
      {Rational(-15, 16), Rational(0)},      // exponential display variant
      {Rational(13, 34), Rational(-13, 204)},  // exponential, second term
      {Rational(5, 11), Rational(-7, 44)},     // lune, second term
  };
  return pairs;
}

LemmaSoundnessReport runLemmaSoundness(std::int64_t samples, std::uint64_t seed,
                                       double psiTol, double carlsonTol) {
  if (samples < 1) throw ArgumentError("lemma soundness needs at least one sample");
  LemmaSoundnessReport report;
  report.samples = samples;
  report.psiTolerance = psiTol;
  report.carlsonTolerance = carlsonTol;
  report.maxPsiExcess = -std::numeric_limits<double>::max();

  const auto& pairs = lemmaInvocationPairs();
  std::vector<std::pair<double, double>> pairsD;
  std::vector<double> phis;
  for (const auto& [mu, nu] : pairs) {
    const RegionVerdict v = classifyRegionExact(mu, nu);
    if (!v.covered() || !v.phi)
      throw PipelineError("invocation pair (" + toString(mu) + ", " + toString(nu) +
                          ") is uncovered");
    pairsD.emplace_back(toDouble(mu), toDouble(nu));
    phis.push_back(*v.phi);
  }

  DiskRng rng(seed);
  for (std::int64_t i = 0; i < samples; ++i) {
    std::array<std::complex<double>, 4> gamma;
    for (auto& g : gamma) g = rng.nextInDisk();
    const SchwarzSample s = schwarzFromSchur(gamma);

    ++report.carlsonChecks;
    if (!checkCarlson(s, carlsonTol))
      report.violations.push_back({"carlson", s, 0.0, carlsonTol});

    for (std::size_t p = 0; p < pairsD.size(); ++p) {
      ++report.psiChecks;
      const double psi = psiEval(s, pairsD[p].first, pairsD[p].second);
      report.maxPsiExcess = std::max(report.maxPsiExcess, psi - phis[p]);
      if (psi > phis[p] + psiTol)
        report.violations.push_back({"psi<=phi at (" + toString(pairs[p].first) + ", " +
                                         toString(pairs[p].second) + ")",
                                     s, psi, phis[p] + psiTol});
    }
  }
  return report;
}

BoundSoundnessReport runBoundSoundness(std::int64_t samplesPerClass, std::uint64_t seed) {
  if (samplesPerClass < 1) throw ArgumentError("bound soundness needs at least one sample");
  BoundSoundnessReport report;
  report.samplesPerClass = samplesPerClass;

  for (ClassId id : kAllClasses) {
    const std::size_t k = static_cast<std::size_t>(id);
    report.upperBounds[k] = boundForClass(id).upperBound;
    // Independent stream per class so the suites can be partitioned.
    DiskRng rng(seed + k + 1);
    double worst = 0.0;
    for (std::int64_t i = 0; i < samplesPerClass; ++i) {
      std::array<std::complex<double>, 4> gamma;
      for (auto& g : gamma) g = rng.nextInDisk();
      const SchwarzSample s = schwarzFromSchur(gamma);
      const double v = std::abs(evalHankel3(id, s.c));
      worst = std::max(worst, v);
      if (v > report.upperBounds[k])
        report.violations.push_back({"|H3| <= bound for class " +
                                         std::string(classSpec(id).name),
                                     s, v, report.upperBounds[k]});
    }
    report.maxObserved[k] = worst;
  }
  return report;
}

}  // namespace hankel
