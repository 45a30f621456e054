#include "mpbandit/experiment.hpp"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>
#include <json.hpp>

#include "mpbandit/error.hpp"
#include "oracles.hpp"

namespace mpbandit {
namespace {

ExperimentConfig small_config(PolicyKind kind) {
  ExperimentConfig c;
  c.algorithm = kind;
  c.turns = 200;
  c.repetitions = 3;
  c.alphas = {0.0, 1.0};
  c.checkpoint_every = 50;
  return c;
}

constexpr PolicyKind kAllKinds[] = {PolicyKind::Ucb1, PolicyKind::EpsilonGreedy,
                                    PolicyKind::Thompson, PolicyKind::AsympOpt,
                                    PolicyKind::UniformRandom};

TEST(Config, Validation) {
  ExperimentConfig c;
  EXPECT_NO_THROW(validate(c));
  c.n_players = 10;
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.turns = 9;
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.repetitions = 0;
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.alphas = {0.5, -0.1};
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.alphas.clear();
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.decay = 1.0;
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.means = {0.5, 1.5, 0.2};
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.algorithm = PolicyKind::AsympOpt;
  c.n_players = 1;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Config, ParseOverridesDefaultsAndRejectsUnknownKeys) {
  const auto c = parse_config(R"({"algorithm":"ucb1","alpha":0.25,"turns":300,
                                  "means":[0.9,0.5,0.1],"n_players":2,"init_order":"random",
                                  "format":"json","base_seed":18446744073709551615})");
  EXPECT_EQ(c.algorithm, PolicyKind::Ucb1);
  EXPECT_EQ(c.alphas, (std::vector<double>{0.25}));
  EXPECT_EQ(c.turns, 300u);
  EXPECT_EQ(c.n_players, 2u);
  EXPECT_EQ(c.init_order, InitOrder::RandomPerPlayer);
  EXPECT_EQ(c.format, OutputFormat::Json);
  EXPECT_EQ(c.base_seed, 18446744073709551615ULL);
  EXPECT_EQ(c.repetitions, ExperimentConfig{}.repetitions);

  EXPECT_THROW(parse_config(R"({"turn":5})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"turns":"many"})"), ConfigError);
  EXPECT_THROW(parse_config("[1,2]"), ConfigError);
  EXPECT_THROW(parse_config("{not json"), ConfigError);
}

TEST(Config, EchoReparsesToSameEcho) {
  ExperimentConfig c = small_config(PolicyKind::AsympOpt);
  c.decay = 0.97;
  c.base_seed = 99;
  const auto echo = config_to_json(c);
  EXPECT_EQ(config_to_json(parse_config(echo)), echo);
  const auto j = nlohmann::json::parse(echo);
  EXPECT_EQ(j.at("decay").get<double>(), 0.97);
  EXPECT_EQ(j.at("algorithm_code").get<int>(), 3);
}

TEST(Config, NumberList) {
  EXPECT_EQ(parse_number_list("0.9, 0.8,0.7"), (std::vector<double>{0.9, 0.8, 0.7}));
  EXPECT_EQ(parse_number_list("1"), (std::vector<double>{1.0}));
  EXPECT_THROW(parse_number_list("0.9,,0.1"), ConfigError);
  EXPECT_THROW(parse_number_list("abc"), ConfigError);
}

TEST(RunEpisode, InitPhaseCoversEveryArmOnce) {
  for (auto kind : {PolicyKind::Ucb1, PolicyKind::EpsilonGreedy, PolicyKind::Thompson}) {
    for (auto order : {InitOrder::Sequential, InitOrder::RandomPerPlayer}) {
      ExperimentConfig c = small_config(kind);
      c.turns = 10;
      c.init_order = order;
      const auto ep = simulate_episode(c, 0.5, 123);
      for (const auto& player : ep.players) {
        EXPECT_EQ(player.own_pulls, std::vector<std::uint64_t>(10, 1));
        EXPECT_FALSE(player.in_init());
      }
    }
  }
}

TEST(RunEpisode, NoCommunicationMeansOwnPullsOnly) {
  for (auto kind : kAllKinds) {
    ExperimentConfig c = small_config(kind);
    const auto ep = simulate_episode(c, 0.0, 7);
    for (const auto& player : ep.players) {
      EXPECT_EQ(player.estimator.total(), c.turns);
      for (ArmIndex i = 0; i < 10; ++i) {
        EXPECT_EQ(player.estimator.count(i), player.own_pulls[i]);
      }
    }
  }
}

TEST(RunEpisode, FullCommunicationSeesEveryPull) {
  for (auto kind : kAllKinds) {
    ExperimentConfig c = small_config(kind);
    c.turns = 100;
    const auto ep = simulate_episode(c, 1.0, 8);
    for (const auto& player : ep.players) EXPECT_EQ(player.estimator.total(), 500u);
    // Everyone holds the same tallies.
    for (const auto& player : ep.players) EXPECT_EQ(player.estimator, ep.players[0].estimator);
  }
}

TEST(RunEpisode, RecordMatchesHistory) {
  ExperimentConfig c = small_config(PolicyKind::Thompson);
  const auto ep = simulate_episode(c, 0.5, 9, /*keep_history=*/true);
  const GameHistory h{ArmSet(c.means), ep.turns};
  ASSERT_EQ(ep.turns.size(), c.turns);
  EXPECT_EQ(ep.record.cumulative_reward.back(), total_reward(h));
  EXPECT_EQ(ep.record.cumulative_loss.back(), total_loss(h));
  const auto occ = cumulative_regret_occupancy(h);
  EXPECT_NEAR(ep.record.regret_occupancy.back(), occ.back(), 1e-9);
  const auto meta = nlohmann::json::parse(ep.record.metadata);
  EXPECT_EQ(meta.at("seed").get<std::uint64_t>(), 9u);
}

TEST(RunEpisode, DeterministicAndSeedSensitive) {
  ExperimentConfig c = small_config(PolicyKind::Thompson);
  const auto a = run_episode(c, 0.5, 42);
  const auto b = run_episode(c, 0.5, 42);
  const auto d = run_episode(c, 0.5, 43);
  EXPECT_EQ(a.regret_occupancy, b.regret_occupancy);
  EXPECT_EQ(a.cumulative_reward, b.cumulative_reward);
  EXPECT_NE(a.cumulative_arm_reward, d.cumulative_arm_reward);
}

TEST(RunEpisode, InvalidConfigRejectedUpFront) {
  ExperimentConfig c = small_config(PolicyKind::Ucb1);
  c.n_players = 12;
  EXPECT_THROW(run_episode(c, 0.0, 1), ConfigError);
  EXPECT_THROW(run_episode(small_config(PolicyKind::Ucb1), 1.5, 1), ConfigError);
}

TEST(SweepAlpha, OneRepetitionHasZeroStd) {
  ExperimentConfig c = small_config(PolicyKind::EpsilonGreedy);
  c.repetitions = 1;
  const auto rows = sweep_alpha(c);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.turn, c.turns);
    EXPECT_EQ(r.repetitions, 1u);
    EXPECT_EQ(r.regret_occupancy_std, 0.0);
    EXPECT_EQ(r.regret_literal_std, 0.0);
  }
  EXPECT_EQ(rows[0].alpha, 0.0);
  EXPECT_EQ(rows[1].alpha, 1.0);
}

TEST(SweepAlpha, AggregatesMatchIndividualEpisodes) {
  ExperimentConfig c = small_config(PolicyKind::Ucb1);
  const auto rows = sweep_alpha(c);
  for (std::size_t a = 0; a < c.alphas.size(); ++a) {
    std::vector<double> occ;
    for (std::size_t r = 0; r < c.repetitions; ++r) {
      occ.push_back(run_episode(c, c.alphas[a], episode_seed(c.base_seed, a, r))
                        .regret_occupancy.back());
    }
    const auto st = testing::sample_stats(occ);
    EXPECT_NEAR(rows[a].regret_occupancy_mean, st.mean, 1e-9);
    EXPECT_NEAR(rows[a].regret_occupancy_std, st.std, 1e-9);
  }
}

TEST(SweepAlpha, SerialAndConcurrentAgree) {
  ExperimentConfig c = small_config(PolicyKind::Thompson);
  c.repetitions = 4;
  c.threads = 1;
  const auto serial = sweep_alpha(c);
  c.threads = 4;
  const auto parallel = sweep_alpha(c);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].regret_occupancy_mean, parallel[i].regret_occupancy_mean);
    EXPECT_EQ(serial[i].regret_literal_std, parallel[i].regret_literal_std);
    EXPECT_EQ(serial[i].reward_mean, parallel[i].reward_mean);
  }
}

TEST(RegretVsTurns, CheckpointsAndFinalRowMatchSweep) {
  ExperimentConfig c = small_config(PolicyKind::EpsilonGreedy);
  c.checkpoint_every = 60;
  EXPECT_EQ(checkpoint_turns(c), (std::vector<std::size_t>{60, 120, 180, 200}));
  const auto curve = regret_vs_turns(c);
  ASSERT_EQ(curve.size(), 2u * 4u);
  const auto sweep = sweep_alpha(c);
  EXPECT_EQ(curve[3].regret_occupancy_mean, sweep[0].regret_occupancy_mean);
  EXPECT_EQ(curve[7].regret_occupancy_mean, sweep[1].regret_occupancy_mean);

  c.checkpoint_every = c.turns;
  EXPECT_EQ(checkpoint_turns(c), (std::vector<std::size_t>{200}));
}

TEST(RegretVsTurns, GreedyOnWrongArmsAccumulatesRegret) {
  // Pure exploitation with sequential init at alpha=1: every player sees the
  // same tallies, piles onto one arm, and the occupancy regret per turn is
  // 3.5 - mu_j >= 2.6, so the curve keeps rising.
  ExperimentConfig c = small_config(PolicyKind::EpsilonGreedy);
  c.epsilon0 = 0.0;
  c.alphas = {1.0};
  c.repetitions = 5;
  const auto curve = regret_vs_turns(c);
  for (std::size_t k = 1; k < curve.size(); ++k) {
    EXPECT_GT(curve[k].regret_occupancy_mean, curve[k - 1].regret_occupancy_mean);
  }
}

}  // namespace
}  // namespace mpbandit
