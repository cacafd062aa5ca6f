#include <benchmark/benchmark.h>

#include <random>

#include "elastic/curves.hpp"
#include "elastic/region.hpp"
#include "elastic/vc.hpp"

using namespace elastic;

namespace {

PolygonalCurve random_curve(std::mt19937_64& rng, std::size_t m) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> v;
  for (std::size_t i = 0; i < m; ++i) v.push_back(make_point({u(rng), u(rng)}));
  return PolygonalCurve(std::move(v));
}

// Star polygon with n vertices around (cx, cy).
PolygonalRegion star(std::mt19937_64& rng, std::size_t n, double cx) {
  std::uniform_real_distribution<double> r(0.6, 1.2);
  std::vector<Point> v;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * M_PI * i / n;
    const double len = r(rng);
    v.push_back(make_point({cx + len * std::cos(a), len * std::sin(a)}));
  }
  return PolygonalRegion(Ring(std::move(v)));
}

template <CurveMeasure M>
void BM_CurveDecide(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto p = random_curve(rng, state.range(0));
  const auto q = random_curve(rng, state.range(0));
  const Radius delta(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(decide(M, p, q, delta).verdict);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CurveDecide<CurveMeasure::hausdorff>)->RangeMultiplier(2)->Range(4, 64)->Complexity();
BENCHMARK(BM_CurveDecide<CurveMeasure::frechet>)->RangeMultiplier(2)->Range(4, 64)->Complexity();
BENCHMARK(BM_CurveDecide<CurveMeasure::weak_frechet>)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_Dtw(benchmark::State& state) {
  std::mt19937_64 rng(8);
  const auto p = random_curve(rng, state.range(0));
  const auto q = random_curve(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dtw(p, q).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dtw)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_FrechetCompute(benchmark::State& state) {
  std::mt19937_64 rng(9);
  const auto p = random_curve(rng, state.range(0));
  const auto q = random_curve(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_distance(p, q, CurveMeasure::frechet));
}
BENCHMARK(BM_FrechetCompute)->Arg(8)->Arg(32);

void BM_RegionDecide(benchmark::State& state) {
  std::mt19937_64 rng(10);
  const auto p = star(rng, state.range(0), 0.0);
  const auto q = star(rng, state.range(0), 0.3);
  const Radius delta(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(decide_hausdorff_region(p, q, delta).verdict);
}
BENCHMARK(BM_RegionDecide)->Arg(4)->Arg(8)->Arg(16);

void BM_RandomShatter(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::vector<GroundElement> ground;
  for (int i = 0; i < state.range(0); ++i) ground.push_back({std::to_string(i), random_curve(rng, 3)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_shatter_search(ground, Measure::discrete_frechet, 500, 1).shattered);
  }
}
BENCHMARK(BM_RandomShatter)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
