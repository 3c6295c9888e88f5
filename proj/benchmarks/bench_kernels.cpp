#include <benchmark/benchmark.h>

#include "islands/generate.hpp"
#include "islands/halfplanes.hpp"
#include "islands/planar.hpp"
#include "islands/sandwich.hpp"

using namespace islands;

namespace {

ColoredPointSet instance(int k, int n, int dim, std::uint64_t seed = 1) {
  gen::GenParams p;
  p.seed = seed;
  p.k = k;
  p.n = n;
  p.dim = dim;
  return gen::generate(p).set;
}

void BM_HalfplaneFamily(benchmark::State& state) {
  const auto set = instance(5, static_cast<int>(state.range(0)), 2);
  const planar::PlanarContext ctx(set);
  for (auto _ : state) {
    planar::HalfplaneFamily family(ctx, set.all_ids());
    benchmark::DoNotOptimize(family.entries().size());
  }
  state.SetComplexityN(static_cast<long>(set.size()));
}
BENCHMARK(BM_HalfplaneFamily)->Arg(2)->Arg(4)->Arg(8)->Arg(12)->Complexity();

void BM_SigmaScan(benchmark::State& state) {
  gen::GenParams p;
  p.k = 5;
  p.n = static_cast<int>(state.range(0));
  p.sizes = {static_cast<std::size_t>(2 * p.n - 1), static_cast<std::size_t>(3 * p.n + 1)};
  const auto set = gen::generate(p).set;
  const planar::PlanarInstance inst(set, p.k, p.n);
  for (auto _ : state) benchmark::DoNotOptimize(planar::sigma_scan(inst, 0).sigma_a.size());
}
BENCHMARK(BM_SigmaScan)->Arg(4)->Arg(8);

void BM_PartitionPlane(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto set = instance(5, n, 2, 7);
  const planar::PlanarInstance inst(set, 5, n);
  for (auto _ : state) benchmark::DoNotOptimize(planar::partition_plane(inst).partition.parts.size());
}
BENCHMARK(BM_PartitionPlane)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SpecialCut(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto set = instance(d + 1, n, d, 3);
  const sandwich::BalancedInstance inst(set, n);
  for (auto _ : state) benchmark::DoNotOptimize(sandwich::special_cut(inst).above_total);
}
BENCHMARK(BM_SpecialCut)->Args({2, 4})->Args({2, 8})->Args({3, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
