#include "mpbandit/policies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "mpbandit/error.hpp"

namespace mpbandit {

namespace {

std::optional<ArmIndex> take_init_arm(PolicyState& state) {
  if (!state.in_init()) return std::nullopt;
  return state.init_order[state.init_cursor++];
}

ArmIndex commit(PolicyState& state, ArmIndex arm) {
  ++state.own_pulls.at(arm);
  return arm;
}

void decay_epsilon(PolicyState& state) {
  ++state.decay_steps;
  state.epsilon =
      state.epsilon0 * std::pow(state.decay, static_cast<double>(state.decay_steps));
}

std::vector<double> observed_means(const PolicyState& state) {
  std::vector<double> mu(state.n_arms());
  for (ArmIndex i = 0; i < mu.size(); ++i) {
    mu[i] = state.estimator.mean(i).value_or(0.0);
  }
  return mu;
}

}  // namespace

std::string_view policy_name(PolicyKind kind) noexcept {
  switch (kind) {
    case PolicyKind::Ucb1: return "ucb1";
    case PolicyKind::EpsilonGreedy: return "egreedy";
    case PolicyKind::Thompson: return "thompson";
    case PolicyKind::AsympOpt: return "asympopt";
    case PolicyKind::UniformRandom: return "random";
  }
  return "unknown";
}

PolicyKind parse_policy_kind(std::string_view name) {
  for (auto kind : {PolicyKind::Ucb1, PolicyKind::EpsilonGreedy,
                    PolicyKind::Thompson, PolicyKind::AsympOpt,
                    PolicyKind::UniformRandom}) {
    if (policy_name(kind) == name) return kind;
  }
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected ucb1|egreedy|thompson|asympopt|random)");
}

bool has_init_phase(PolicyKind kind) noexcept {
  return kind == PolicyKind::Ucb1 || kind == PolicyKind::EpsilonGreedy ||
         kind == PolicyKind::Thompson;
}

void validate(const PolicyParams& params) {
  if (!(params.epsilon0 >= 0.0 && params.epsilon0 <= 1.0)) {
    throw ConfigError("epsilon0 must lie in [0, 1]");
  }
  if (!(params.decay > 0.0 && params.decay < 1.0)) {
    throw ConfigError("decay k must lie in (0, 1)");
  }
  if (!(params.clamp_floor > 0.0 && params.clamp_floor <= 1.0)) {
    throw ConfigError("clamp floor must lie in (0, 1]");
  }
}

PolicyState make_policy_state(PolicyKind kind, std::size_t n_arms,
                              const PolicyParams& params, Rng& rng) {
  validate(params);
  if (kind == PolicyKind::AsympOpt && params.n_players < 2) {
    throw ConfigError("asympopt needs at least 2 players");
  }
  PolicyState s{.kind = kind, .estimator = PlayerEstimator(n_arms)};
  s.epsilon0 = params.epsilon0;
  s.epsilon = params.epsilon0;
  s.decay = params.decay;
  s.clamp_floor = params.clamp_floor;
  s.n_players = params.n_players;
  s.own_pulls.assign(n_arms, 0);
  if (has_init_phase(kind)) {
    s.init_order.resize(n_arms);
    std::iota(s.init_order.begin(), s.init_order.end(), ArmIndex{0});
    if (params.init_order == InitOrder::RandomPerPlayer) {
      std::shuffle(s.init_order.begin(), s.init_order.end(), rng);
    }
  }
  return s;
}

void observe(PolicyState& state, std::span<const Observation> observations) {
  for (const auto& obs : observations) state.estimator.add(obs.arm, obs.reward);
}

ArmIndex argmax_uniform_ties(std::span<const double> values, Rng& rng) {
  const double best = *std::max_element(values.begin(), values.end());
  std::vector<ArmIndex> ties;
  for (ArmIndex i = 0; i < values.size(); ++i) {
    if (values[i] == best) ties.push_back(i);
  }
  return ties.size() == 1 ? ties.front() : ties[rng.uniform_index(ties.size())];
}

ArmIndex ucb1_select(PolicyState& state, Rng& rng) {
  if (auto arm = take_init_arm(state)) return commit(state, *arm);
  const auto& est = state.estimator;
  const double log_n = std::log(static_cast<double>(est.total()));
  std::vector<double> index(state.n_arms());
  for (ArmIndex i = 0; i < index.size(); ++i) {
    const auto n_i = est.count(i);
    // Only reachable when init is skipped; an unseen arm wins outright.
    index[i] = n_i == 0 ? HUGE_VAL
                        : *est.mean(i) + std::sqrt(2.0 * log_n / static_cast<double>(n_i));
  }
  return commit(state, argmax_uniform_ties(index, rng));
}

ArmIndex epsilon_greedy_select(PolicyState& state, Rng& rng) {
  if (auto arm = take_init_arm(state)) return commit(state, *arm);
  ArmIndex arm;
  if (rng.uniform() < 1.0 - state.epsilon) {
    arm = argmax_uniform_ties(observed_means(state), rng);
  } else {
    arm = rng.uniform_index(state.n_arms());
  }
  decay_epsilon(state);
  return commit(state, arm);
}

ArmIndex thompson_select(PolicyState& state, Rng& rng) {
  if (auto arm = take_init_arm(state)) return commit(state, *arm);
  const auto& est = state.estimator;
  std::vector<double> theta(state.n_arms());
  for (ArmIndex i = 0; i < theta.size(); ++i) {
    theta[i] = rng.beta(static_cast<double>(est.successes(i)) + 1.0,
                        static_cast<double>(est.failures(i)) + 1.0);
  }
  return commit(state, argmax_uniform_ties(theta, rng));
}

std::vector<double> clamped_means(const PolicyState& state) {
  auto mu = observed_means(state);
  for (double& m : mu) m = std::max(m, state.clamp_floor);
  return mu;
}

ArmIndex asymp_opt_select(PolicyState& state, Rng& rng) {
  ArmIndex arm;
  if (1.0 - state.epsilon > rng.uniform()) {
    const auto mix = compute_mix_probabilities(clamped_means(state), state.n_players);
    const double target = rng.uniform();
    double cumulative = 0.0;
    arm = mix.active.back();  // covers round-off leaving the sum just under 1
    for (ArmIndex i : mix.active) {
      cumulative += mix.c[i];
      if (cumulative >= target) {
        arm = i;
        break;
      }
    }
  } else {
    arm = rng.uniform_index(state.n_arms());
  }
  decay_epsilon(state);
  return commit(state, arm);
}

ArmIndex uniform_random_select(PolicyState& state, Rng& rng) {
  return commit(state, rng.uniform_index(state.n_arms()));
}

ArmIndex select_arm(PolicyState& state, Rng& rng) {
  switch (state.kind) {
    case PolicyKind::Ucb1: return ucb1_select(state, rng);
    case PolicyKind::EpsilonGreedy: return epsilon_greedy_select(state, rng);
    case PolicyKind::Thompson: return thompson_select(state, rng);
    case PolicyKind::AsympOpt: return asymp_opt_select(state, rng);
    case PolicyKind::UniformRandom: return uniform_random_select(state, rng);
  }
  throw std::logic_error("unhandled policy kind");
}

}  // namespace mpbandit
