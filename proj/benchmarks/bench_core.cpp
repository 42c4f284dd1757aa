#include <benchmark/benchmark.h>

#include "noregret/continuous.hpp"
#include "noregret/environments.hpp"
#include "noregret/geometry.hpp"
#include "noregret/rng.hpp"
#include "noregret/strategies.hpp"

using namespace noregret;

namespace {

Vector random_scores(std::size_t d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Vector y(d);
  for (double& v : y) v = rng.uniform(-5.0, 5.0);
  return y;
}

void BM_LogitChoice(benchmark::State& state) {
  const Vector y = random_scores(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(logit_choice(y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogitChoice)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_ProjectSimplex(benchmark::State& state) {
  const Vector y = random_scores(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(project_simplex(y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProjectSimplex)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_StrategyStep(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const bool entropy = state.range(1) == 0;
  Strategy s(entropy ? Regularizer::entropy(d)
                     : Regularizer::euclidean(ConvexBody::simplex(d, Norm::l2)),
             ParameterSchedule::inv_sqrt(0.5));
  auto stream = PayoffStream::iid_uniform(d, 1.0, entropy ? Norm::l1 : Norm::l2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(s.step(stream.next()));
  state.SetLabel(entropy ? "entropy" : "euclidean");
}
BENCHMARK(BM_StrategyStep)->ArgsProduct({{10, 100, 1000}, {0, 1}});

void BM_IntervalQuadrature(benchmark::State& state) {
  const std::size_t d = 10;
  const bool entropy = state.range(1) == 0;
  const auto reg = entropy ? Regularizer::entropy(d)
                           : Regularizer::euclidean(ConvexBody::simplex(d, Norm::l2));
  auto stream = PayoffStream::iid_uniform(d, 1.0, reg.norm(), 4);
  std::vector<Vector> payoffs;
  for (int k = 0; k < 50; ++k) payoffs.push_back(stream.next());
  const InterpolatedRun run(reg, ParameterSchedule::inv_sqrt(1.0), payoffs,
                            static_cast<std::size_t>(state.range(0)));
  std::size_t k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run.interval_integral(k));
    k = k % 50 + 1;
  }
  state.SetLabel(entropy ? "entropy" : "euclidean");
}
BENCHMARK(BM_IntervalQuadrature)->ArgsProduct({{64, 256}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
