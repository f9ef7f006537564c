#include <benchmark/benchmark.h>

#include <complex>

#include "hankel/bound_engine.hpp"
#include "hankel/class_models.hpp"
#include "hankel/schwarz.hpp"
#include "hankel/search.hpp"
#include "hankel/univariate.hpp"

using namespace hankel;

static void BM_SeriesMulRational(benchmark::State& state) {
  TruncatedSeries<Rational> a(5), b(5);
  for (int k = 0; k <= 5; ++k) {
    a.set(k, Rational(k + 1, 7));
    b.set(k, Rational(2 * k - 3, 5));
  }
  for (auto _ : state) {
    auto c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_SeriesMulRational);

static void BM_SchurExpansion(benchmark::State& state) {
  DiskRng rng(1);
  std::array<std::complex<double>, 4> gamma;
  for (auto& g : gamma) g = rng.nextInDisk();
  for (auto _ : state) {
    auto s = schwarzFromSchur(gamma);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SchurExpansion);

static void BM_EvalHankel3(benchmark::State& state) {
  DiskRng rng(2);
  const SchwarzSample s = sampleSchwarz(rng, 1)[0];
  for (auto _ : state) {
    auto v = evalHankel3(ClassId::Starlike, s.c);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_EvalHankel3);

static void BM_RootIsolation(benchmark::State& state) {
  const RationalPoly p{Rational(-15), Rational(-23), Rational(21), Rational(21)};
  for (auto _ : state) {
    auto roots = isolateRealRoots(p, Rational(0), Rational(1));
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_RootIsolation);

static void BM_DeriveCoefficients(benchmark::State& state) {
  for (auto _ : state) {
    auto a = deriveCoefficients(ClassId::Lune, 5);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_DeriveCoefficients);

static void BM_SearchStep(benchmark::State& state) {
  boundForClass(ClassId::Exponential);  // warm the cached pipeline
  SearchConfig cfg;
  cfg.classId = ClassId::Exponential;
  cfg.budget = state.range(0);
  cfg.refineIters = 0;
  cfg.seed = 3;
  for (auto _ : state) {
    auto r = search(cfg);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchStep)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
