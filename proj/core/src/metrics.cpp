#include "mpbandit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "mpbandit/error.hpp"

namespace mpbandit {

namespace {

// Neumaier summation.
double compensated_sum(std::span<const double> xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

double occupied_mean_sum(const ArmSet& arms, std::span<const ArmIndex> choices,
                         std::vector<std::uint8_t>& scratch) {
  scratch.assign(arms.size(), 0);
  double sum = 0.0;
  for (ArmIndex a : choices) {
    if (!scratch.at(a)) {
      scratch[a] = 1;
      sum += arms.means()[a];
    }
  }
  return sum;
}

double chosen_mean_sum(const ArmSet& arms, std::span<const ArmIndex> choices) {
  double sum = 0.0;
  for (ArmIndex a : choices) sum += arms.mean(a);
  return sum;
}

std::vector<double> running_regret(
    const GameHistory& history,
    const std::function<double(const TurnOutcome&)>& earned) {
  if (history.turns.empty()) throw std::invalid_argument("empty history");
  const double best = optimal_per_turn_reward(
      history.arms, history.turns.front().n_players());
  std::vector<double> out;
  out.reserve(history.turns.size());
  double acc = 0.0;
  for (const auto& turn : history.turns) {
    acc += best - earned(turn);
    out.push_back(acc);
  }
  return out;
}

}  // namespace

std::vector<std::uint8_t> occupancy_indicator(std::span<const ArmIndex> choices,
                                              std::size_t n_arms) {
  std::vector<std::uint8_t> occ(n_arms, 0);
  for (ArmIndex a : choices) occ.at(a) = 1;
  return occ;
}

std::int64_t total_reward(const GameHistory& history) {
  if (history.turns.empty()) throw std::invalid_argument("empty history");
  std::int64_t g = 0;
  for (const auto& turn : history.turns) {
    const auto occ = occupancy_indicator(turn.choices, turn.n_arms());
    for (ArmIndex i = 0; i < occ.size(); ++i) g += occ[i] * turn.arm_rewards[i];
  }
  return g;
}

std::int64_t total_loss(const GameHistory& history) {
  if (history.turns.empty()) throw std::invalid_argument("empty history");
  std::int64_t l = 0;
  for (const auto& turn : history.turns) {
    const auto occ = occupancy_indicator(turn.choices, turn.n_arms());
    for (ArmIndex i = 0; i < occ.size(); ++i) l += (1 - occ[i]) * turn.arm_rewards[i];
  }
  return l;
}

double optimal_per_turn_reward(const ArmSet& arms, std::size_t n_players) {
  if (n_players > arms.size()) {
    throw ConfigError("more players than arms in optimal reward");
  }
  std::vector<double> sorted(arms.means().begin(), arms.means().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  sorted.resize(n_players);
  return compensated_sum(sorted);
}

std::vector<double> cumulative_regret_literal(const GameHistory& history) {
  return running_regret(history, [&](const TurnOutcome& t) {
    return chosen_mean_sum(history.arms, t.choices);
  });
}

std::vector<double> cumulative_regret_occupancy(const GameHistory& history) {
  std::vector<std::uint8_t> scratch;
  return running_regret(history, [&](const TurnOutcome& t) {
    return occupied_mean_sum(history.arms, t.choices, scratch);
  });
}

double expected_turn_loss(std::span<const double> c, const ArmSet& arms,
                          std::size_t n_players) {
  if (c.size() != arms.size()) {
    throw std::invalid_argument("probability vector length differs from arm count");
  }
  const int n = static_cast<int>(n_players);
  double loss = 0.0;
  for (ArmIndex i = 0; i < c.size(); ++i) {
    loss += std::pow(1.0 - c[i], n) * arms.means()[i];
  }
  return loss;
}

RunRecorder::RunRecorder(const ArmSet& arms, std::size_t n_players,
                         std::size_t expected_turns)
    : arms_(&arms), best_(optimal_per_turn_reward(arms, n_players)) {
  rec_.cumulative_reward.reserve(expected_turns);
  rec_.cumulative_loss.reserve(expected_turns);
  rec_.cumulative_arm_reward.reserve(expected_turns);
  rec_.regret_literal.reserve(expected_turns);
  rec_.regret_occupancy.reserve(expected_turns);
}

void RunRecorder::record(const TurnOutcome& turn) {
  auto last = [](const auto& v) {
    using T = typename std::decay_t<decltype(v)>::value_type;
    return v.empty() ? T{} : v.back();
  };
  const double occupied = occupied_mean_sum(*arms_, turn.choices, occupied_);
  std::int64_t g = 0;
  std::int64_t l = 0;
  std::int64_t x = 0;
  for (ArmIndex i = 0; i < turn.n_arms(); ++i) {
    x += turn.arm_rewards[i];
    if (occupied_[i]) {
      g += turn.arm_rewards[i];
    } else {
      l += turn.arm_rewards[i];
    }
  }
  rec_.cumulative_reward.push_back(last(rec_.cumulative_reward) + g);
  rec_.cumulative_loss.push_back(last(rec_.cumulative_loss) + l);
  rec_.cumulative_arm_reward.push_back(last(rec_.cumulative_arm_reward) + x);
  rec_.regret_literal.push_back(last(rec_.regret_literal) + best_ -
                                chosen_mean_sum(*arms_, turn.choices));
  rec_.regret_occupancy.push_back(last(rec_.regret_occupancy) + best_ - occupied);
}

RunRecord RunRecorder::finish(std::string metadata) && {
  rec_.metadata = std::move(metadata);
  return std::move(rec_);
}

}  // namespace mpbandit
