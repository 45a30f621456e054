#include <benchmark/benchmark.h>

#include <vector>

#include "mpbandit/bandit_env.hpp"
#include "mpbandit/comm_net.hpp"
#include "mpbandit/config.hpp"
#include "mpbandit/experiment.hpp"
#include "mpbandit/mix_probabilities.hpp"

using namespace mpbandit;

static void BM_EnvStep(benchmark::State& state) {
  Environment env(ArmSet(spread_means()), 1);
  const std::vector<ArmIndex> choices{0, 0, 1, 2, 2};
  for (auto _ : state) {
    auto t = env.step(choices);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_EnvStep);

static void BM_SampleTurnGraph(benchmark::State& state) {
  std::uint64_t turn = 0;
  for (auto _ : state) {
    auto g = sample_turn_graph(5, 0.5, 42, turn++);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_SampleTurnGraph);

static void BM_Disseminate(benchmark::State& state) {
  Rng arm_rng(1), winner_rng(2), graph_rng(3);
  const std::vector<ArmIndex> choices{0, 1, 2, 3, 4};
  const auto outcome = env_step(ArmSet(spread_means()), choices, arm_rng, winner_rng);
  const auto graph = sample_graph(5, 1.0, graph_rng);
  for (auto _ : state) {
    auto inbox = disseminate(outcome, graph);
    benchmark::DoNotOptimize(inbox);
  }
}
BENCHMARK(BM_Disseminate);

static void BM_ComputeMixProbabilities(benchmark::State& state) {
  const auto mu = spread_means();
  for (auto _ : state) {
    auto mix = compute_mix_probabilities(mu, 5);
    benchmark::DoNotOptimize(mix);
  }
}
BENCHMARK(BM_ComputeMixProbabilities);

static void BM_RunEpisode(benchmark::State& state) {
  ExperimentConfig c;
  c.algorithm = static_cast<PolicyKind>(state.range(0));
  c.turns = 1000;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto rec = run_episode(c, 0.5, seed++);
    benchmark::DoNotOptimize(rec);
  }
  state.SetLabel(std::string(policy_name(c.algorithm)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.turns));
}
BENCHMARK(BM_RunEpisode)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
