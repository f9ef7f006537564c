#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunOutput {
  int exitCode;
  std::string out;
};

RunOutput run(const std::string& args, const std::string& envPrefix = "") {
  const std::string cmd = envPrefix + std::string(HANKEL3_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string tmpPath(const std::string& name) {
  return std::string("/tmp/hankel3_test_") + std::to_string(getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("derive prints exact coefficient tables") {
  const RunOutput starlike = run("derive --class starlike");
  CHECK(starlike.exitCode == 0);
  CHECK(starlike.out.find("a2 = 2*c1") != std::string::npos);
  CHECK(starlike.out.find("a3 = c2 + 3*c1^2") != std::string::npos);

  const RunOutput lune = run("derive --class lune");
  CHECK(lune.exitCode == 0);
  CHECK(lune.out.find("a4 = (1/3)*c3 + (5/6)*c1*c2 + (5/12)*c1^3") != std::string::npos);

  const RunOutput latex = run("derive --class starlike --latex");
  CHECK(latex.out.find("a_{2} = 2c_{1}") != std::string::npos);
}

TEST_CASE("derive rejects an unknown class with a usage error") {
  CHECK(run("derive --class bogus").exitCode == 2);
  CHECK(run("nonsense").exitCode == 2);
}

TEST_CASE("bound subcommand") {
  const RunOutput star = run("bound --class starlike --json");
  REQUIRE(star.exitCode == 0);
  const json j = json::parse(star.out);
  CHECK(std::abs(j["upperBound"].get<double>() - 0.777987) < 1e-5);

  const RunOutput sym = run("bound --class symmetric");
  CHECK(sym.exitCode == 0);
  CHECK(sym.out.find("1/4 + 1/(3*sqrt(3))") != std::string::npos);

  const RunOutput expo = run("bound --class exponential --json");
  REQUIRE(expo.exitCode == 0);
  CHECK(json::parse(expo.out)["upperBoundExact"] == "17/72");
}

TEST_CASE("verify subcommand") {
  const RunOutput a = run("verify --samples 2000 --seed 7");
  CHECK(a.exitCode == 0);
  CHECK(a.out.find("0 violations") != std::string::npos);

  const RunOutput b = run("verify --samples 2000 --seed 7");
  CHECK(b.out == a.out);  // byte-identical summary for a fixed seed

  CHECK(run("verify --samples 0").exitCode == 2);

  const RunOutput viaEnv = run("verify --samples 2000", "HANKEL_SEED=7 ");
  CHECK(viaEnv.out == a.out);
}

TEST_CASE("grid-export subcommand") {
  const std::string path = tmpPath("grid.csv");
  const RunOutput r = run("grid-export --resolution 3 --out " + path);
  CHECK(r.exitCode == 0);
  const std::string csv = slurp(path);
  CHECK(csv.find("0,0,0\n") != std::string::npos);
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    double x, y, h;
    REQUIRE(sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &h) == 3);
    CHECK(y <= 1.0 - x * x + 1e-12);
    CHECK(h <= 6.003764890074216);
  }
  std::remove(path.c_str());

  CHECK(run("grid-export --resolution 1 --out " + path).exitCode == 2);
  CHECK(run("grid-export --resolution 3 --out /nonexistent-dir/x.csv").exitCode == 1);
}

TEST_CASE("search subcommand: zero start and determinism") {
  const RunOutput zero = run("search --class starlike --budget 1 --seed 0");
  CHECK(zero.exitCode == 0);
  CHECK(zero.out.find("bestValue = 0\n") != std::string::npos);

  const std::string p1 = tmpPath("s1.json"), p2 = tmpPath("s2.json");
  const RunOutput r1 =
      run("search --class lune --budget 400 --refine 20 --seed 11 --json --out " + p1);
  const RunOutput r2 =
      run("search --class lune --budget 400 --refine 20 --seed 11 --json --out " + p2);
  CHECK(r1.exitCode == 0);
  CHECK(r2.exitCode == 0);
  const std::string f1 = slurp(p1), f2 = slurp(p2);
  CHECK(!f1.empty());
  CHECK(f1 == f2);  // identical output file for fixed seed/budget
  const json j = json::parse(f1);
  CHECK(j["bestValue"].get<double>() <= j["classUpperBound"].get<double>());
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("config file presets with flag precedence") {
  const std::string cfgPath = tmpPath("cfg.ini");
  {
    std::ofstream f(cfgPath);
    f << "[search]\nbudget=50\nseed=4\nrefine=5\n";
  }
  const RunOutput fromCfg =
      run("--config " + cfgPath + " search --class symmetric --json");
  REQUIRE(fromCfg.exitCode == 0);
  CHECK(json::parse(fromCfg.out)["config"]["budget"] == 50);
  CHECK(json::parse(fromCfg.out)["config"]["seed"] == 4);

  const RunOutput overridden =
      run("--config " + cfgPath + " search --class symmetric --budget 60 --json");
  REQUIRE(overridden.exitCode == 0);
  CHECK(json::parse(overridden.out)["config"]["budget"] == 60);
  std::remove(cfgPath.c_str());
}
