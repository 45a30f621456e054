#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mpbandit/config.hpp"
#include "mpbandit/metrics.hpp"
#include "mpbandit/policies.hpp"

namespace mpbandit {

struct EpisodeResult {
  RunRecord record;
  std::vector<PolicyState> players;  // final state of every player
  std::vector<TurnOutcome> turns;    // empty unless keep_history
};

/// Plays config.turns turns. Each turn: every player selects, the environment
/// realizes rewards and collisions, a fresh graph with connectivity `alpha`
/// is drawn, observations are delivered and ingested. The result depends only
/// on (config, alpha, seed). Throws ConfigError before the first turn on an
/// invalid config.
EpisodeResult simulate_episode(const ExperimentConfig& config, double alpha,
                               std::uint64_t seed, bool keep_history = false);

RunRecord run_episode(const ExperimentConfig& config, double alpha, std::uint64_t seed);

struct AggregateRecord {
  PolicyKind algorithm = PolicyKind::Thompson;
  double alpha = 0.0;
  std::size_t turn = 0;
  std::size_t repetitions = 0;
  double regret_occupancy_mean = 0.0;
  double regret_occupancy_std = 0.0;
  double regret_literal_mean = 0.0;
  double regret_literal_std = 0.0;
  double reward_mean = 0.0;
  double loss_mean = 0.0;
  std::uint64_t seed_base = 0;
};

/// Metric values of one episode at one checkpoint turn.
struct CheckpointSample {
  double regret_occupancy = 0.0;
  double regret_literal = 0.0;
  double reward = 0.0;
  double loss = 0.0;
};

/// samples[alpha index][repetition][checkpoint index]
using SampleGrid = std::vector<std::vector<std::vector<CheckpointSample>>>;

/// Runs every (alpha, repetition) episode, on config.threads workers, and
/// keeps the metrics at the given 1-based turn checkpoints. Repetition r at
/// alpha index a uses episode_seed(base_seed, a, r), so the grid is the same
/// for any thread count.
SampleGrid run_grid(const ExperimentConfig& config,
                    const std::vector<std::size_t>& checkpoints);

/// Multiples of checkpoint_every up to turns, always ending at turns.
std::vector<std::size_t> checkpoint_turns(const ExperimentConfig& config);

/// Mean and sample standard deviation per (alpha, checkpoint).
std::vector<AggregateRecord> aggregate(const ExperimentConfig& config,
                                       const std::vector<std::size_t>& checkpoints,
                                       const SampleGrid& samples);

/// One row per alpha with final-turn metrics.
std::vector<AggregateRecord> sweep_alpha(const ExperimentConfig& config);

/// One row per (alpha, checkpoint).
std::vector<AggregateRecord> regret_vs_turns(const ExperimentConfig& config);

}  // namespace mpbandit
