#include <benchmark/benchmark.h>

#include <bcn/cross_section.hpp>
#include <bcn/lemmas.hpp>
#include <bcn/observables.hpp>
#include <bcn/sampling.hpp>
#include <bcn/symplectic.hpp>

#include <random>

using namespace bcn;

namespace {

struct Fixture {
  ModelParams p;
  DualCoordinates c;
};

Fixture fixture(int n) {
  std::mt19937_64 rng(77);
  Fixture f;
  f.p = sample_params(n, rng);
  SampleOptions opt;
  opt.floor_sin = opt.floor_cos = true;
  f.c = sample_coordinates(f.p, rng, opt);
  return f;
}

void BM_build_point(benchmark::State& state) {
  Fixture f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PhasePoint x = build_point(f.c, f.p);
    benchmark::DoNotOptimize(x.y);
  }
}

void BM_poisson_bracket(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Fixture f = fixture(n);
  PhasePoint x = build_point(f.c, f.p);
  for (auto _ : state) {
    double v = poisson(Observable::chi(2 * n), Observable::phi(2 * n), x, f.p);
    benchmark::DoNotOptimize(v);
  }
}

void BM_extract_all(benchmark::State& state) {
  Fixture f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    BracketMatrices B = extract_all(f.c, f.p);
    benchmark::DoNotOptimize(B.Q);
  }
}

void BM_pullback_matrix(benchmark::State& state) {
  Fixture f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    MatR M = pullback_matrix(f.c, f.p);
    benchmark::DoNotOptimize(M);
  }
}

void BM_term_identities(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Fixture f = fixture(n);
  int k = 2 * n - 1;
  for (auto _ : state) {
    IdentityReport r = check_term_identities(f.c, f.p, k, 1);
    benchmark::DoNotOptimize(r.total_error);
  }
}

}  // namespace

BENCHMARK(BM_build_point)->DenseRange(1, 4);
BENCHMARK(BM_poisson_bracket)->DenseRange(1, 4);
BENCHMARK(BM_extract_all)->DenseRange(1, 4);
BENCHMARK(BM_pullback_matrix)->DenseRange(1, 3);
BENCHMARK(BM_term_identities)->DenseRange(1, 4);

BENCHMARK_MAIN();
