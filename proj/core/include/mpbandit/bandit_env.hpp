#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpbandit/rng.hpp"

namespace mpbandit {

using ArmIndex = std::size_t;
using PlayerIndex = std::size_t;
using Reward = std::uint8_t;

/// True Bernoulli means of the arms. Never visible to players.
class ArmSet {
 public:
  /// Throws ConfigError unless there are at least two arms and every mean
  /// lies in [0, 1].
  explicit ArmSet(std::vector<double> means);

  std::size_t size() const noexcept { return means_.size(); }
  double mean(ArmIndex i) const { return means_.at(i); }
  std::span<const double> means() const noexcept { return means_; }

  /// Throws ConfigError unless 1 <= n_players < size().
  void check_player_count(std::size_t n_players) const;

 private:
  std::vector<double> means_;
};

struct TurnOutcome {
  std::vector<ArmIndex> choices;               // one per player
  std::vector<Reward> arm_rewards;             // one per arm
  std::vector<std::optional<PlayerIndex>> winners;  // set iff the arm was pulled
  std::vector<Reward> realized_rewards;        // one per player

  std::size_t n_players() const noexcept { return choices.size(); }
  std::size_t n_arms() const noexcept { return arm_rewards.size(); }
};

/// One Bernoulli draw per arm, in arm order.
std::vector<Reward> sample_arm_rewards(const ArmSet& arms, Rng& rng);

/// Each pulled arm goes to one puller chosen uniformly; the rest get 0.
/// Uncontested arms consume no randomness. Throws std::out_of_range on a
/// choice outside [0, S).
TurnOutcome resolve_collisions(std::span<const ArmIndex> choices,
                               std::span<const Reward> arm_rewards, Rng& rng);

TurnOutcome env_step(const ArmSet& arms, std::span<const ArmIndex> choices,
                     Rng& arm_rng, Rng& winner_rng);

/// Environment bound to one episode's arm-reward and winner substreams.
class Environment {
 public:
  Environment(ArmSet arms, std::uint64_t episode_seed);

  const ArmSet& arms() const noexcept { return arms_; }
  TurnOutcome step(std::span<const ArmIndex> choices);

 private:
  ArmSet arms_;
  Rng arm_rng_;
  Rng winner_rng_;
};

}  // namespace mpbandit
