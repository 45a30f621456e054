#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mpbandit/bandit_env.hpp"

namespace mpbandit {

/// Ground truth plus every turn of a finished episode.
struct GameHistory {
  ArmSet arms;
  std::vector<TurnOutcome> turns;
};

/// Running per-turn series for one episode; entry k covers turns 0..k.
struct RunRecord {
  std::vector<std::int64_t> cumulative_reward;      // G
  std::vector<std::int64_t> cumulative_loss;        // L
  std::vector<std::int64_t> cumulative_arm_reward;  // sum of every X_{i,k}
  std::vector<double> regret_literal;
  std::vector<double> regret_occupancy;
  std::string metadata;  // JSON config echo

  std::size_t turns() const noexcept { return cumulative_reward.size(); }
};

/// 1 for every arm pulled by at least one player.
std::vector<std::uint8_t> occupancy_indicator(std::span<const ArmIndex> choices,
                                              std::size_t n_arms);

std::int64_t total_reward(const GameHistory& history);
std::int64_t total_loss(const GameHistory& history);

/// Sum of the N largest means, compensated so decimal inputs such as
/// 0.9 + 0.8 + ... + 0.5 land on the nearest double of the exact total.
/// Throws ConfigError if N > S.
double optimal_per_turn_reward(const ArmSet& arms, std::size_t n_players);

/// T * best - sum_p sum_k mu_{Y_{p,k}}. Counts every colliding player, so it
/// can go negative.
std::vector<double> cumulative_regret_literal(const GameHistory& history);

/// T * best - sum_k sum_i I_{i,k} mu_i. Each occupied arm counts once.
std::vector<double> cumulative_regret_occupancy(const GameHistory& history);

/// sum_i (1 - c_i)^N mu_i
double expected_turn_loss(std::span<const double> c, const ArmSet& arms,
                          std::size_t n_players);

/// Builds a RunRecord turn by turn without keeping the history.
class RunRecorder {
 public:
  RunRecorder(const ArmSet& arms, std::size_t n_players, std::size_t expected_turns = 0);

  void record(const TurnOutcome& turn);
  RunRecord finish(std::string metadata) &&;

 private:
  const ArmSet* arms_;
  double best_;
  std::vector<std::uint8_t> occupied_;
  RunRecord rec_;
};

}  // namespace mpbandit
