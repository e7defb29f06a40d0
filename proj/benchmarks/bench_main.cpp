#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hesselink/instability.hpp"
#include "hesselink/polynomial.hpp"
#include "hesselink/state_polytope.hpp"

using namespace hesselink;

namespace {

// Random degree-s lattice points via balls-into-bins, fixed seed so runs
// stay comparable.
StateSet random_state(std::mt19937_64& rng, int r, int s, int count) {
  std::uniform_int_distribution<int> bin(0, r);
  std::vector<Monomial> points;
  for (int p = 0; p < count; ++p) {
    std::vector<int> exps(static_cast<size_t>(r) + 1, 0);
    for (int ball = 0; ball < s; ++ball) ++exps[static_cast<size_t>(bin(rng))];
    points.emplace_back(std::move(exps));
  }
  return StateSet(r, s, Integer(1), std::move(points));
}

void BM_NearestPoint(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  int count = static_cast<int>(state.range(1));
  std::mt19937_64 rng(99);
  std::vector<StateSet> instances;
  for (int i = 0; i < 32; ++i)
    instances.push_back(random_state(rng, r, 7, count));
  size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nearest_point(instances[next]));
    next = (next + 1) % instances.size();
  }
}
BENCHMARK(BM_NearestPoint)
    ->ArgsProduct({{2, 4}, {6, 12, 20}})
    ->Unit(benchmark::kMicrosecond);

void BM_ShiftedState(benchmark::State& state) {
  auto f = parse_polynomial("x1^2*x2 - x0^3", 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(state_degree_dD(f, 1));
}
BENCHMARK(BM_ShiftedState)->Unit(benchmark::kMillisecond);

void BM_DegreeShiftCheck(benchmark::State& state) {
  auto f = parse_polynomial("x0^3", 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_degree_shift(f, 1));
}
BENCHMARK(BM_DegreeShiftCheck)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  auto f = parse_polynomial("x1^2*x2 - x0^3", 2);
  SearchConfig config;
  config.budget = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(f, config));
}
BENCHMARK(BM_Classify)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_GroupAction(benchmark::State& state) {
  auto f = parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4", 3);
  std::vector<RatVec> rows = {
      {Rational(1), Rational(2), Rational(0), Rational(-1)},
      {Rational(0), Rational(1), Rational(3), Rational(1)},
      {Rational(2), Rational(0), Rational(1), Rational(0)},
      {Rational(1), Rational(1), Rational(0), Rational(1)}};
  GroupElement g(rows);
  for (auto _ : state) benchmark::DoNotOptimize(act(g, f));
}
BENCHMARK(BM_GroupAction)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
