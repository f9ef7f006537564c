#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hankel/class_models.hpp"
#include "hankel/schwarz.hpp"

namespace hankel {

struct SearchConfig {
  ClassId classId = ClassId::Starlike;
  std::int64_t budget = 100000;  // random Schur samples (evaluation 1 is gamma = 0)
  int refineIters = 200;         // local-refinement iterations (skipped when budget < 2)
  std::uint64_t seed = 0;
  double stepScale = 0.5;  // initial perturbation radius in Schur-parameter space

  bool operator==(const SearchConfig&) const = default;
};

struct SearchResult {
  SearchConfig config;
  double bestValue = 0.0;
  SchwarzSample witness;
  /// Best-so-far trace: (evaluation index, new best) at every improvement.
  std::vector<std::pair<std::int64_t, double>> history;
  double classUpperBound = 0.0;

  bool operator==(const SearchResult&) const = default;
};

/// Best |H3(1)| found by uniform Schur sampling plus coordinate-wise local
/// refinement with shrinking perturbations, projected back to the closed unit
/// polydisk. Deterministic given the seed.
SearchResult search(const SearchConfig& cfg);

struct GapRow {
  ClassId classId;
  double lowerBound;         // best witness value from the search
  double upperBound;         // certified bound
  std::optional<double> priorBound;  // literature constant, where one exists
  double gapRatio;           // lowerBound / upperBound
};

/// One row per class; throws ArgumentError unless results hold exactly one
/// entry per class.
std::vector<GapRow> gapReport(const std::vector<SearchResult>& results);

/// The gap row for a single result.
GapRow gapRowFor(const SearchResult& result);

}  // namespace hankel
