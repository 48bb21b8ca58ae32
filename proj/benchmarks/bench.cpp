#include <benchmark/benchmark.h>

#include <vector>

#include "riesz/minimize.hpp"
#include "riesz/nets.hpp"
#include "riesz/special.hpp"
#include "riesz/sphere.hpp"

using namespace riesz;

static void BM_AverageEnergy(benchmark::State& state) {
  const auto c = random_config(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(average_pair_energy(1.0, c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AverageEnergy)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

static void BM_EnergyAndGradient(benchmark::State& state) {
  const auto c = random_config(static_cast<std::size_t>(state.range(0)), 1);
  std::vector<double> x, g;
  for (const auto& p : c.points) x.insert(x.end(), {p.x, p.y, p.z});
  for (auto _ : state) benchmark::DoNotOptimize(energy_and_gradient(0.0, x, g));
}
BENCHMARK(BM_EnergyAndGradient)->Arg(32)->Arg(256);

static void BM_LocalMinimize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  MinimizeOptions o;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(local_minimize(0.0, random_config(n, ++seed), o).energy);
}
BENCHMARK(BM_LocalMinimize)->Arg(12)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_ZetaHexagonal(benchmark::State& state) {
  double s = 3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_hexagonal(s));
    s = s < 9.0 ? s + 0.01 : 3.0;
  }
}
BENCHMARK(BM_ZetaHexagonal);

static void BM_Sobol(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sobol_points(static_cast<std::size_t>(state.range(0))).points.data());
}
BENCHMARK(BM_Sobol)->Arg(4096);

static void BM_NetCurve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(net_energy_curve(-1.0, static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_NetCurve)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
