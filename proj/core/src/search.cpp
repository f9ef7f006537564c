#include "hankel/search.hpp"

#include <cmath>

#include "hankel/bound_engine.hpp"
#include "hankel/errors.hpp"

namespace hankel {

namespace {

double objective(ClassId id, const SchwarzSample& s) {
  return std::abs(evalHankel3(id, s.c));
}

std::complex<double> projectToDisk(std::complex<double> g) {
  const double m = std::abs(g);
  return m > 1.0 ? g / m : g;
}

}  // namespace

SearchResult search(const SearchConfig& cfg) {
  if (cfg.budget < 1) throw ArgumentError("search budget must be >= 1");
  if (!(cfg.stepScale > 0.0 && cfg.stepScale <= 1.0))
    throw ArgumentError("stepScale must lie in (0, 1]");
  if (cfg.refineIters < 0) throw ArgumentError("refineIters must be >= 0");

  SearchResult result;
  result.config = cfg;
  result.classUpperBound = boundForClass(cfg.classId).upperBound;

  DiskRng rng(cfg.seed);
  std::int64_t evals = 0;

  const auto consider = [&](const SchwarzSample& s) {
    ++evals;
    const double v = objective(cfg.classId, s);
    if (v > result.bestValue || evals == 1) {
      result.bestValue = v;
      result.witness = s;
      result.history.emplace_back(evals, v);
    }
  };

  // Evaluation 1 is always the zero function; the remaining budget is
  // uniform over the closed unit polydisk of Schur parameters.
  consider(schwarzFromSchur({}));
  for (std::int64_t i = 1; i < cfg.budget; ++i) {
    std::array<std::complex<double>, 4> gamma;
    for (auto& g : gamma) g = rng.nextInDisk();
    consider(schwarzFromSchur(gamma));
  }

  if (cfg.budget >= 2 && cfg.refineIters > 0) {
    for (int it = 0; it < cfg.refineIters; ++it) {
      // Radius shrinks geometrically from stepScale to about stepScale/55.
      const double radius =
          cfg.stepScale * std::exp(-4.0 * static_cast<double>(it) / cfg.refineIters);
      for (int coord = 0; coord < 4; ++coord) {
        std::array<std::complex<double>, 4> gamma = result.witness.schurParams;
        gamma[static_cast<std::size_t>(coord)] =
            projectToDisk(gamma[static_cast<std::size_t>(coord)] + radius * rng.nextInDisk());
        consider(schwarzFromSchur(gamma));
      }
    }
  }

  if (result.bestValue > result.classUpperBound)
    throw PipelineError("search exceeded the certified upper bound for class " +
                        std::string(classSpec(cfg.classId).name));
  return result;
}

GapRow gapRowFor(const SearchResult& r) {
  GapRow row{r.config.classId, r.bestValue, r.classUpperBound, std::nullopt,
             r.bestValue / r.classUpperBound};
  // Previously published bounds for these classes.
  if (r.config.classId == ClassId::SymmetricPoints) row.priorBound = 2.5;
  if (r.config.classId == ClassId::Exponential) row.priorBound = 0.50047781;
  return row;
}

std::vector<GapRow> gapReport(const std::vector<SearchResult>& results) {
  std::array<const SearchResult*, 4> byClass{};
  for (const SearchResult& r : results) {
    auto& slot = byClass[static_cast<std::size_t>(r.config.classId)];
    if (slot) throw ArgumentError("duplicate search result for class " +
                                  std::string(classSpec(r.config.classId).name));
    slot = &r;
  }
  for (ClassId id : kAllClasses)
    if (!byClass[static_cast<std::size_t>(id)])
      throw ArgumentError("missing search result for class " +
                          std::string(classSpec(id).name));

  std::vector<GapRow> rows;
  for (ClassId id : kAllClasses)
    rows.push_back(gapRowFor(*byClass[static_cast<std::size_t>(id)]));
  return rows;
}

}  // namespace hankel
