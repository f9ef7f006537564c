#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hankel/bound_engine.hpp"
#include "hankel/search.hpp"
#include "hankel/verify.hpp"

namespace hankel {

inline constexpr const char* kToolVersion = HANKEL3_VERSION;

/// Reproducibility header embedded in every emitted artifact. The timestamp
/// honors SOURCE_DATE_EPOCH and is empty otherwise, so output is
/// byte-deterministic by default.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
  std::string timestamp;
};

RunManifest makeManifest(std::string command,
                         std::vector<std::pair<std::string, std::string>> parameters,
                         std::uint64_t seed);

/// Deterministic shortest-faithful double rendering (17 significant digits).
std::string formatDouble(double v);

std::string derivationTable(ClassId id, bool latexMode, const RunManifest& manifest);
std::string derivationJson(ClassId id, const RunManifest& manifest);

std::string boundReportText(const BoundReport& report, const RunManifest& manifest);
std::string boundReportJson(const BoundReport& report, const RunManifest& manifest);

std::string searchResultText(const SearchResult& result, const GapRow& row,
                             const RunManifest& manifest);
std::string searchResultJson(const SearchResult& result, const GapRow& row,
                             const RunManifest& manifest);

std::string verifySummaryText(const LemmaSoundnessReport& lemma,
                              const BoundSoundnessReport& bound,
                              const RunManifest& manifest);
std::string verifySummaryJson(const LemmaSoundnessReport& lemma,
                              const BoundSoundnessReport& bound,
                              const RunManifest& manifest);

/// CSV rows x,y,h(x,y) over the grid points of [0,1]^2 that lie inside Omega
/// (membership decided in exact rationals), row-major with x outermost.
/// The manifest rides along as leading '#' comment lines.
void writeSurfaceGrid(std::ostream& os, int resolution, const RunManifest& manifest);

}  // namespace hankel
