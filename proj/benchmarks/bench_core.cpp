#include <benchmark/benchmark.h>

#include "esgame/arrangement.hpp"
#include "esgame/order_type.hpp"
#include "esgame/patterns.hpp"
#include "esgame/sampler.hpp"
#include "esgame/strategy.hpp"

using namespace esg;

namespace {

std::vector<Point> sample(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_general_position(n, rng);
}

// Position at `step` (odd) reached by the strategy against a random opponent.
std::vector<Point> position(int step, Variant v) {
  Rng rng(7);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < step)
    pts.push_back(pts.size() % 2 ? choose_move(pts, v) : random_adversary_move(pts, v, rng));
  return pts;
}

void BM_Orientation(benchmark::State& state) {
  const auto pts = sample(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(orientation(pts[0], pts[1], pts[2]));
}
BENCHMARK(BM_Orientation);

void BM_OrderType(benchmark::State& state) {
  const auto pts = sample(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(OrderType(pts));
}
BENCHMARK(BM_OrderType)->Arg(5)->Arg(9);

void BM_Arrangement(benchmark::State& state) {
  const auto pts = sample(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(arrangement_cells(pts));
  state.SetLabel(std::to_string(arrangement_cells(pts).size()) + " cells");
}
BENCHMARK(BM_Arrangement)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ConvexFivegon(benchmark::State& state) {
  const auto pts = sample(9, 4);
  for (auto _ : state) benchmark::DoNotOptimize(find_convex_5gon(pts));
}
BENCHMARK(BM_ConvexFivegon);

void BM_EmptyConvexFivegon(benchmark::State& state) {
  const auto pts = sample(9, 5);
  for (auto _ : state) benchmark::DoNotOptimize(find_empty_convex_5gon(pts));
}
BENCHMARK(BM_EmptyConvexFivegon);

void BM_ChooseMove(benchmark::State& state) {
  const int step = static_cast<int>(state.range(0));
  const Variant v = state.range(1) ? Variant::Empty : Variant::Convex;
  const auto pts = position(step, v);
  for (auto _ : state) benchmark::DoNotOptimize(choose_move(pts, v));
}
BENCHMARK(BM_ChooseMove)
    ->ArgsProduct({{3, 5, 7}, {0, 1}})
    ->ArgNames({"step", "empty"})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
