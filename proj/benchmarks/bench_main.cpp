#include <benchmark/benchmark.h>

#include <random>

#include "cfrac/boundary.hpp"
#include "cfrac/catalog.hpp"
#include "cfrac/cf.hpp"
#include "cfrac/iwasawa.hpp"
#include "cfrac/lattice.hpp"
#include "cfrac/random.hpp"

using namespace cfrac;

static void BM_ExpandFloat(benchmark::State& state, const char* name) {
  auto algo = catalog_algorithm(name);
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    auto e = expand(algo.domain.sample(rng), 40, algo);
    benchmark::DoNotOptimize(e.digits.data());
  }
}
BENCHMARK_CAPTURE(BM_ExpandFloat, hurwitz_A, "hurwitz-A");
BENCHMARK_CAPTURE(BM_ExpandFloat, quat_hurwitz, "quat-hurwitz");
BENCHMARK_CAPTURE(BM_ExpandFloat, oct_cayley, "oct-cayley");

static void BM_ExpandExact(benchmark::State& state, const char* name) {
  auto algo = catalog_algorithm(name);
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    auto e = expand(algo.domain.sample_exact(rng, 1 << 20), 12, algo);
    benchmark::DoNotOptimize(e.digits.data());
  }
}
BENCHMARK_CAPTURE(BM_ExpandExact, hurwitz_A, "hurwitz-A");
BENCHMARK_CAPTURE(BM_ExpandExact, oct_cayley, "oct-cayley");

static void BM_Nearest(benchmark::State& state, const char* name) {
  Order L = builtin_order(name);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  FloatElement x(L.algebra());
  for (auto _ : state) {
    for (std::size_t i = 0; i < x.dim(); ++i) x[i] = u(rng);
    benchmark::DoNotOptimize(nearest(L, x).value);
  }
}
BENCHMARK_CAPTURE(BM_Nearest, Zi, "Zi");
BENCHMARK_CAPTURE(BM_Nearest, Hurwitz, "Hurwitz");
BENCHMARK_CAPTURE(BM_Nearest, Cayley, "Cayley");

static void BM_IwasawaExpand(benchmark::State& state) {
  auto algo = iwasawa_algorithm("x1h");
  std::mt19937_64 rng(4);
  for (auto _ : state) {
    auto e = iwasawa_expand(sample_point(algo, rng), algo, 15);
    benchmark::DoNotOptimize(e.digits.data());
  }
}
BENCHMARK(BM_IwasawaExpand);

static void BM_Decomposition(benchmark::State& state, const char* name, std::size_t levels) {
  for (auto _ : state) {
    auto d = build_decomposition(boundary_lattice(name), levels);
    benchmark::DoNotOptimize(d.levels.size());
  }
}
BENCHMARK_CAPTURE(BM_Decomposition, Z2, "Z2", 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decomposition, Z3, "Z3", 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
