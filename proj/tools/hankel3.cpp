// Command-line front end: derivations, certified bounds, Monte-Carlo
// verification, extremal search and grid export.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hankel/report_io.hpp"

namespace {

using namespace hankel;

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(outPath, std::ios::binary);
  if (!f) throw Error("cannot open output path: " + outPath);
  f << text;
  f.flush();
  if (!f) throw Error("write failed: " + outPath);
}

ClassId requireClass(const std::string& token) {
  const auto id = parseClassId(token);
  if (!id) throw CLI::ValidationError("--class", "unknown class '" + token + "'");
  return *id;
}

const std::vector<std::string> kClassTokens = {"starlike", "symmetric", "exponential",
                                               "lune"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"third Hankel determinant bounds for four starlike-type classes"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value presets; command-line flags take precedence");

  std::string classToken = "starlike";
  std::string outPath;
  bool jsonOut = false;
  bool latexOut = false;
  std::int64_t samples = 100000;
  std::int64_t budget = 100000;
  int refineIters = 200;
  double stepScale = 0.5;
  std::uint64_t seed = 0;
  int resolution = 0;

  CLI::App* derive = app.add_subcommand("derive", "print a2..a5 as exact rationals in c1..c4");
  derive->add_option("--class", classToken, "function class")
      ->required()
      ->check(CLI::IsMember(kClassTokens));
  derive->add_flag("--latex", latexOut, "emit display-math form");
  derive->add_flag("--json", jsonOut, "structured output");
  derive->add_option("--out", outPath, "write to file instead of stdout");

  CLI::App* bound = app.add_subcommand("bound", "run the certified upper-bound pipeline");
  bound->add_option("--class", classToken, "function class")
      ->required()
      ->check(CLI::IsMember(kClassTokens));
  bound->add_flag("--json", jsonOut, "structured output");
  bound->add_option("--out", outPath, "write to file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "Monte-Carlo lemma and bound soundness");
  verify->add_option("--samples", samples, "sample count (lemma suite; also per class)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed")->envname("HANKEL_SEED");
  verify->add_flag("--json", jsonOut, "structured output");
  verify->add_option("--out", outPath, "write to file instead of stdout");

  CLI::App* searchCmd = app.add_subcommand("search", "extremal lower-bound search");
  searchCmd->add_option("--class", classToken, "function class")
      ->required()
      ->check(CLI::IsMember(kClassTokens));
  searchCmd->add_option("--budget", budget, "random sample budget")
      ->check(CLI::PositiveNumber);
  searchCmd->add_option("--refine", refineIters, "local refinement iterations")
      ->check(CLI::NonNegativeNumber);
  searchCmd->add_option("--step-scale", stepScale, "initial perturbation radius");
  searchCmd->add_option("--seed", seed, "random seed")->envname("HANKEL_SEED");
  searchCmd->add_flag("--json", jsonOut, "structured output");
  searchCmd->add_option("--out", outPath, "write to file instead of stdout");

  CLI::App* grid = app.add_subcommand("grid-export", "CSV of x,y,h(x,y) over the domain");
  grid->add_option("--resolution", resolution, "grid points per axis")
      ->required()
      ->check(CLI::Range(2, 100000));
  grid->add_option("--out", outPath, "output CSV path")->required();

  try {
    app.parse(argc, argv);

    if (derive->parsed()) {
      const ClassId id = requireClass(classToken);
      const RunManifest manifest = makeManifest(
          "derive", {{"class", classToken}, {"latex", latexOut ? "true" : "false"}}, 0);
      emit(jsonOut ? derivationJson(id, manifest) : derivationTable(id, latexOut, manifest), outPath);
    } else if (bound->parsed()) {
      const ClassId id = requireClass(classToken);
      const RunManifest manifest = makeManifest("bound", {{"class", classToken}}, 0);
      const BoundReport& report = boundForClass(id);
      emit(jsonOut ? boundReportJson(report, manifest) : boundReportText(report, manifest), outPath);
    } else if (verify->parsed()) {
      const RunManifest manifest =
          makeManifest("verify", {{"samples", std::to_string(samples)}}, seed);
      const LemmaSoundnessReport lemma = runLemmaSoundness(samples, seed);
      const BoundSoundnessReport bounds = runBoundSoundness(samples, seed);
      emit(jsonOut ? verifySummaryJson(lemma, bounds, manifest)
                   : verifySummaryText(lemma, bounds, manifest),
           outPath);
      if (!lemma.violations.empty() || !bounds.violations.empty()) return 1;
    } else if (searchCmd->parsed()) {
      const ClassId id = requireClass(classToken);
      SearchConfig cfg;
      cfg.classId = id;
      cfg.budget = budget;
      cfg.refineIters = refineIters;
      cfg.stepScale = stepScale;
      cfg.seed = seed;
      const RunManifest manifest = makeManifest(
          "search",
          {{"class", classToken},
           {"budget", std::to_string(budget)},
           {"refine", std::to_string(refineIters)},
           {"step-scale", formatDouble(stepScale)}},
          seed);
      const SearchResult result = search(cfg);
      const GapRow row = gapRowFor(result);
      emit(jsonOut ? searchResultJson(result, row, manifest)
                   : searchResultText(result, row, manifest),
           outPath);
    } else if (grid->parsed()) {
      const RunManifest manifest =
          makeManifest("grid-export", {{"resolution", std::to_string(resolution)}}, 0);
      std::ofstream f(outPath, std::ios::binary);
      if (!f) throw Error("cannot open output path: " + outPath);
      writeSurfaceGrid(f, resolution, manifest);
      f.flush();
      if (!f) throw Error("write failed: " + outPath);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;  // internal/pipeline failure
  }
  return 0;
}
