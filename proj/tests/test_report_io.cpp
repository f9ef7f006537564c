#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "hankel/report_io.hpp"
#include "json.hpp"

using namespace hankel;
using json = nlohmann::json;

TEST_CASE("manifest timestamp honors SOURCE_DATE_EPOCH and is empty otherwise") {
  unsetenv("SOURCE_DATE_EPOCH");
  CHECK(makeManifest("x", {}, 0).timestamp.empty());
  setenv("SOURCE_DATE_EPOCH", "0", 1);
  CHECK(makeManifest("x", {}, 0).timestamp == "1970-01-01T00:00:00Z");
  setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  CHECK(makeManifest("x", {}, 0).timestamp == "2023-11-14T22:13:20Z");
  unsetenv("SOURCE_DATE_EPOCH");
}

TEST_CASE("derivation output") {
  const std::string table = derivationTable(ClassId::Starlike, false, makeManifest("derive", {{"class", "starlike"}}, 0));
  CHECK(table.find("a2 = 2*c1") != std::string::npos);
  CHECK(table.find("a3 = c2 + 3*c1^2") != std::string::npos);

  const std::string latexTable = derivationTable(ClassId::Starlike, true, makeManifest("derive", {}, 0));
  CHECK(latexTable.find("\\[ a_{2} = 2c_{1} \\]") != std::string::npos);

  const std::string js = derivationJson(ClassId::Lune, makeManifest("derive", {}, 0));
  const json j = json::parse(js);
  CHECK(j["coefficients"]["a2"] == "c1");
  CHECK(j["class"] == "lune");
}

TEST_CASE("bound report JSON round-trips and carries exact rationals") {
  const BoundReport& r = boundForClass(ClassId::Exponential);
  const std::string text = boundReportJson(r, makeManifest("bound", {{"class", "exponential"}}, 0));
  const json j = json::parse(text);
  CHECK(j["upperBoundExact"] == "17/72");
  CHECK(j["closedForm"] == "17/72");
  CHECK(j["upperBound"].get<double>() == doctest::Approx(17.0 / 72.0));
  CHECK(j["lemmaInvocations"].size() == 2);
  CHECK(j["lemmaInvocations"][0]["mu"] == "-5/16");
  // parse -> reserialize is the identity on semantic content
  CHECK(json::parse(j.dump(2)) == j);
  for (const auto& s : j["steps"]) CHECK(s["status"] == "pass");
}

TEST_CASE("starlike bound report exposes the optimizer evidence") {
  const BoundReport& r = boundForClass(ClassId::Starlike);
  const json j = json::parse(boundReportJson(r, makeManifest("bound", {}, 0)));
  CHECK(j["optimizerEvidence"]["interiorCriticalPoints"].empty());
  CHECK(!j["optimizerEvidence"]["rejectedCandidates"].empty());
  CHECK(j["optimizerEvidence"]["boundaryMaxima"].size() == 4);
  CHECK(j["upperBoundExact"].is_null());
  const std::string text = boundReportText(r, makeManifest("bound", {}, 0));
  CHECK(text.find("upper bound") != std::string::npos);
  CHECK(text.find("rejected candidate") != std::string::npos);
}

TEST_CASE("search result JSON round-trips") {
  SearchConfig cfg;
  cfg.classId = ClassId::SymmetricPoints;
  cfg.budget = 300;
  cfg.refineIters = 10;
  cfg.seed = 5;
  const SearchResult result = search(cfg);
  const GapRow row = gapRowFor(result);
  const json j = json::parse(searchResultJson(result, row, makeManifest("search", {}, 5)));
  CHECK(j["class"] == "symmetric");
  CHECK(j["gap"]["priorBound"].get<double>() == doctest::Approx(2.5));
  CHECK(j["bestValue"].get<double>() == doctest::Approx(result.bestValue));
  CHECK(j["witness"]["c"].size() == 4);
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("verify summary") {
  const LemmaSoundnessReport lemma = runLemmaSoundness(500, 7);
  const BoundSoundnessReport bound = runBoundSoundness(500, 7);
  const std::string text = verifySummaryText(lemma, bound, makeManifest("verify", {}, 7));
  CHECK(text.find("0 violations") != std::string::npos);
  const json j = json::parse(verifySummaryJson(lemma, bound, makeManifest("verify", {}, 7)));
  CHECK(j["violations"] == 0);
  CHECK(j["lemmaSoundness"]["samples"] == 500);
}

TEST_CASE("surface grid export") {
  std::ostringstream os;
  writeSurfaceGrid(os, 3, makeManifest("grid-export", {}, 0));
  const std::string csv = os.str();
  CHECK(csv.find("0,0,0\n") != std::string::npos);
  // resolution 3: x in {0, 1/2, 1}; the (1/2, 1) and (1, 1/2), (1, 1) points
  // fall outside Omega.
  int rows = 0;
  std::istringstream is(csv);
  std::string line;
  double maxH = -1e9;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++rows;
    double x, y, h;
    REQUIRE(sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &h) == 3);
    CHECK(y <= 1.0 - x * x + 1e-12);
    maxH = std::max(maxH, h);
  }
  CHECK(rows == 6);
  CHECK(maxH <= 6.003764890074216);
  CHECK_THROWS_AS(writeSurfaceGrid(os, 1, makeManifest("grid-export", {}, 0)),
                  ArgumentError);
}
