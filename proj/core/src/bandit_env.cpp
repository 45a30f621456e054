#include "mpbandit/bandit_env.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mpbandit/error.hpp"

namespace mpbandit {

ArmSet::ArmSet(std::vector<double> means) : means_(std::move(means)) {
  if (means_.size() < 2) {
    throw ConfigError("need at least 2 arms, got " +
                      std::to_string(means_.size()));
  }
  for (std::size_t i = 0; i < means_.size(); ++i) {
    const double m = means_[i];
    if (!(m >= 0.0 && m <= 1.0)) {
      throw ConfigError("mean of arm " + std::to_string(i) +
                        " is outside [0, 1]");
    }
  }
}

void ArmSet::check_player_count(std::size_t n_players) const {
  if (n_players < 1 || n_players >= size()) {
    throw ConfigError("player count must satisfy 1 <= N < S (N=" +
                      std::to_string(n_players) +
                      ", S=" + std::to_string(size()) + ")");
  }
}

std::vector<Reward> sample_arm_rewards(const ArmSet& arms, Rng& rng) {
  std::vector<Reward> out(arms.size());
  for (std::size_t i = 0; i < arms.size(); ++i) {
    out[i] = rng.bernoulli(arms.means()[i]) ? 1 : 0;
  }
  return out;
}

TurnOutcome resolve_collisions(std::span<const ArmIndex> choices,
                               std::span<const Reward> arm_rewards, Rng& rng) {
  const std::size_t n_arms = arm_rewards.size();
  std::vector<std::vector<PlayerIndex>> pullers(n_arms);
  for (PlayerIndex p = 0; p < choices.size(); ++p) {
    if (choices[p] >= n_arms) {
      throw std::out_of_range("player " + std::to_string(p) + " chose arm " +
                              std::to_string(choices[p]) + " but S=" +
                              std::to_string(n_arms));
    }
    pullers[choices[p]].push_back(p);
  }

  TurnOutcome out;
  out.choices.assign(choices.begin(), choices.end());
  out.arm_rewards.assign(arm_rewards.begin(), arm_rewards.end());
  out.winners.assign(n_arms, std::nullopt);
  out.realized_rewards.assign(choices.size(), 0);

  for (ArmIndex i = 0; i < n_arms; ++i) {
    const auto& who = pullers[i];
    if (who.empty()) continue;
    const PlayerIndex winner =
        who.size() == 1 ? who.front() : who[rng.uniform_index(who.size())];
    out.winners[i] = winner;
    out.realized_rewards[winner] = arm_rewards[i];
  }
  return out;
}

TurnOutcome env_step(const ArmSet& arms, std::span<const ArmIndex> choices,
                     Rng& arm_rng, Rng& winner_rng) {
  const auto rewards = sample_arm_rewards(arms, arm_rng);
  return resolve_collisions(choices, rewards, winner_rng);
}

Environment::Environment(ArmSet arms, std::uint64_t episode_seed)
    : arms_(std::move(arms)),
      arm_rng_(Rng::substream(episode_seed, StreamRole::ArmRewards)),
      winner_rng_(Rng::substream(episode_seed, StreamRole::Winners)) {}

TurnOutcome Environment::step(std::span<const ArmIndex> choices) {
  return env_step(arms_, choices, arm_rng_, winner_rng_);
}

}  // namespace mpbandit
