#include <benchmark/benchmark.h>

#include <cstddef>

#include "communal/alpha.hpp"
#include "communal/counting.hpp"
#include "communal/genfun.hpp"
#include "communal/monoid.hpp"
#include "communal/quasipoly.hpp"

namespace {

using namespace communal;

const AlphaSystem& candy_system() {
  static const AlphaSystem sys = AlphaSystem::parse("1/3,2/5,2/7");
  return sys;
}

void bench_count(benchmark::State& state) {
  const AlphaSystem& sys = candy_system();
  const BigInt g = BigInt("123456789123456789");
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_compositions(sys, g));
  }
}
BENCHMARK(bench_count);

void bench_enumerate(benchmark::State& state) {
  const AlphaSystem& sys = candy_system();
  const BigInt g{10'000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_bijective(sys, g));
  }
}
BENCHMARK(bench_enumerate);

void bench_base_set_scan(benchmark::State& state) {
  const AlphaSystem sys = AlphaSystem::parse("1/3,1/3,1/3,1/3");  // A = 27, 27^4 candidates
  for (auto _ : state) {
    benchmark::DoNotOptimize(base_set(sys));
  }
}
BENCHMARK(bench_base_set_scan);

void bench_series(benchmark::State& state) {
  const AlphaSystem& sys = candy_system();
  const RationalGF gf = build_gf(sys, base_set(sys));
  const std::size_t order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(series(gf, order));
  }
}
BENCHMARK(bench_series)->Arg(1'000)->Arg(100'000);

void bench_decompose(benchmark::State& state) {
  const AlphaSystem& sys = candy_system();
  const GeneratorSet gens = generators(sys);
  const Composition c{{BigInt(3333), BigInt(4000), BigInt(2857)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(sys, gens, c));
  }
}
BENCHMARK(bench_decompose);

void bench_quasipoly_extract(benchmark::State& state) {
  const AlphaSystem& sys = candy_system();  // period 105
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_quasipoly(sys));
  }
}
BENCHMARK(bench_quasipoly_extract);

}  // namespace

BENCHMARK_MAIN();
