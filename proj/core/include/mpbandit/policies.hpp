#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mpbandit/bandit_env.hpp"
#include "mpbandit/comm_net.hpp"
#include "mpbandit/estimator.hpp"
#include "mpbandit/mix_probabilities.hpp"
#include "mpbandit/rng.hpp"

namespace mpbandit {

enum class PolicyKind {
  Ucb1 = 0,
  EpsilonGreedy = 1,
  Thompson = 2,
  AsympOpt = 3,
  UniformRandom = 4,
};

/// CLI spelling: ucb1, egreedy, thompson, asympopt, random.
std::string_view policy_name(PolicyKind kind) noexcept;
/// Throws ConfigError on an unknown name.
PolicyKind parse_policy_kind(std::string_view name);
inline int policy_code(PolicyKind kind) noexcept { return static_cast<int>(kind); }

/// UCB1, epsilon-greedy and Thompson sampling open by pulling every arm once.
bool has_init_phase(PolicyKind kind) noexcept;

enum class InitOrder {
  Sequential,     // arms 0..S-1 in index order, identical for all players
  RandomPerPlayer,
};

struct PolicyParams {
  double epsilon0 = 1.0;
  double decay = 0.995;
  double clamp_floor = 1e-3;
  InitOrder init_order = InitOrder::Sequential;
  std::size_t n_players = 1;
};

/// Throws ConfigError on epsilon0 outside [0,1], decay outside (0,1), or
/// clamp_floor outside (0,1].
void validate(const PolicyParams& params);

/// Decision state of one player.
struct PolicyState {
  PolicyKind kind;
  PlayerEstimator estimator;
  double epsilon0 = 1.0;
  double epsilon = 1.0;
  double decay = 0.995;
  std::uint64_t decay_steps = 0;
  double clamp_floor = 1e-3;
  std::size_t n_players = 1;
  std::vector<ArmIndex> init_order{};
  std::size_t init_cursor = 0;
  std::vector<std::uint64_t> own_pulls{};

  std::size_t n_arms() const noexcept { return estimator.n_arms(); }
  bool in_init() const noexcept { return init_cursor < init_order.size(); }
};

/// `rng` is only drawn from when params.init_order is RandomPerPlayer.
PolicyState make_policy_state(PolicyKind kind, std::size_t n_arms,
                              const PolicyParams& params, Rng& rng);

/// Folds every observation into the estimator, own pull or neighbor report
/// alike.
void observe(PolicyState& state, std::span<const Observation> observations);

// Each selector records the pull in own_pulls. Every argmax breaks exact ties
// uniformly with `rng`.
ArmIndex ucb1_select(PolicyState& state, Rng& rng);
/// Decays epsilon once per post-initialization selection.
ArmIndex epsilon_greedy_select(PolicyState& state, Rng& rng);
ArmIndex thompson_select(PolicyState& state, Rng& rng);
/// With probability epsilon a uniform arm, otherwise a draw from the mixing
/// probabilities of the clamped observed means. Decays epsilon every call.
ArmIndex asymp_opt_select(PolicyState& state, Rng& rng);
ArmIndex uniform_random_select(PolicyState& state, Rng& rng);

ArmIndex select_arm(PolicyState& state, Rng& rng);

/// Observed means clamped below at state.clamp_floor; unseen arms get the
/// floor.
std::vector<double> clamped_means(const PolicyState& state);

/// Index of a maximum of `values`, uniform over exact ties. Draws from `rng`
/// only when there is a tie.
ArmIndex argmax_uniform_ties(std::span<const double> values, Rng& rng);

}  // namespace mpbandit
