#include "toriclab/divisoriality.hpp"
#include "toriclab/gale.hpp"
#include "toriclab/io.hpp"
#include "toriclab/lattice.hpp"
#include "toriclab/random_fans.hpp"

#include <benchmark/benchmark.h>

using namespace toriclab;

namespace {

Fan data_fan(const std::string& name) { return read_fan(std::string(TORICLAB_DATA_DIR) + "/" + name + ".fan.json"); }

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-20, 20);
  return m;
}

void BM_Hermite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(n, n + 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_Hermite)->Arg(4)->Arg(8)->Arg(16);

void BM_Smith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(n, n, 12);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_Smith)->Arg(4)->Arg(8);

void BM_ConeFacets(benchmark::State& state) {
  const Fan f = data_fan("oda-quasiaffine");
  for (auto _ : state) {
    const Cone c(f.rank(), f.rays());
    benchmark::DoNotOptimize(c.description().facets.size());
  }
}
BENCHMARK(BM_ConeFacets);

void BM_ShephardOda(benchmark::State& state) {
  const Fan f = data_fan("oda");
  for (auto _ : state) benchmark::DoNotOptimize(shephard_test(f).strongly_polytopal);
}
BENCHMARK(BM_ShephardOda);

void BM_SupportFunctionOda(benchmark::State& state) {
  const Fan f = data_fan("oda");
  for (auto _ : state) benchmark::DoNotOptimize(support_function_test(f).strongly_polytopal);
}
BENCHMARK(BM_SupportFunctionOda);

void BM_KDivisoriality(benchmark::State& state) {
  const Fan f = data_fan("div4");
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_divisoriality(f, k).k_divisorial);
}
BENCHMARK(BM_KDivisoriality)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_RandomKleinschmidt(benchmark::State& state) {
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(random_kleinschmidt_fan(3, 5, rng).max_cones().size());
}
BENCHMARK(BM_RandomKleinschmidt)->Unit(benchmark::kMillisecond);

void BM_RandomFan3(benchmark::State& state) {
  Rng rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(random_complete_fan3(8, rng).max_cones().size());
}
BENCHMARK(BM_RandomFan3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
