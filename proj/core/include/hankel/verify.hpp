#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hankel/class_models.hpp"
#include "hankel/rational.hpp"
#include "hankel/schwarz.hpp"

namespace hankel {

/// The (mu, nu) pairs the bound chains rely on, all with Phi = 1; includes the
/// display-variant points so the classifier is exercised on every quoted pair.
const std::vector<std::pair<Rational, Rational>>& lemmaInvocationPairs();

struct SoundnessViolation {
  std::string check;
  SchwarzSample sample;
  double observed;
  double allowed;
};

struct LemmaSoundnessReport {
  std::int64_t samples = 0;
  double psiTolerance = 0.0;
  double carlsonTolerance = 0.0;
  std::int64_t psiChecks = 0;
  std::int64_t carlsonChecks = 0;
  double maxPsiExcess = -1.0;  // largest Psi - Phi seen (how close Psi gets)
  std::vector<SoundnessViolation> violations;
};

/// Monte-Carlo check of the two coefficient lemmas on Schur-generated samples:
/// all three Carlson shell inequalities (within carlsonTol) and
/// Psi(w) <= Phi(mu, nu) at every invocation pair (within psiTol).
LemmaSoundnessReport runLemmaSoundness(std::int64_t samples, std::uint64_t seed,
                                       double psiTol = 1e-9, double carlsonTol = 1e-12);

struct BoundSoundnessReport {
  std::int64_t samplesPerClass = 0;
  std::array<double, 4> upperBounds{};
  std::array<double, 4> maxObserved{};
  std::vector<SoundnessViolation> violations;
};

/// Monte-Carlo check that |H3(1)| never exceeds the certified class bound.
BoundSoundnessReport runBoundSoundness(std::int64_t samplesPerClass, std::uint64_t seed);

}  // namespace hankel
