#include "mpbandit/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "mpbandit/bandit_env.hpp"
#include "mpbandit/comm_net.hpp"
#include "mpbandit/error.hpp"

namespace mpbandit {

namespace {

std::string episode_metadata(const ExperimentConfig& config, double alpha,
                             std::uint64_t seed) {
  nlohmann::json j;
  j["alpha"] = alpha;
  j["config"] = nlohmann::json::parse(config_to_json(config));
  j["seed"] = seed;
  return j.dump();
}

}  // namespace

EpisodeResult simulate_episode(const ExperimentConfig& config, double alpha,
                               std::uint64_t seed, bool keep_history) {
  validate(config);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("alpha: must lie in [0, 1]");
  }

  const std::size_t n = config.n_players;
  Environment env(ArmSet(config.means), seed);
  const std::size_t n_arms = env.arms().size();

  const PolicyParams params = config.policy_params();
  std::vector<PolicyState> players;
  std::vector<Rng> player_rngs;
  players.reserve(n);
  player_rngs.reserve(n);
  for (PlayerIndex p = 0; p < n; ++p) {
    Rng init_rng = Rng::substream(seed, StreamRole::InitOrder, p);
    players.push_back(make_policy_state(config.algorithm, n_arms, params, init_rng));
    player_rngs.push_back(Rng::substream(seed, StreamRole::Player, p));
  }

  RunRecorder recorder(env.arms(), n, config.turns);
  EpisodeResult result;
  if (keep_history) result.turns.reserve(config.turns);

  std::vector<ArmIndex> choices(n);
  for (std::size_t turn = 0; turn < config.turns; ++turn) {
    for (PlayerIndex p = 0; p < n; ++p) {
      choices[p] = select_arm(players[p], player_rngs[p]);
    }
    TurnOutcome outcome = env.step(choices);
    const CommGraph graph = sample_turn_graph(n, alpha, seed, turn);
    const auto inboxes = disseminate(outcome, graph);
    for (PlayerIndex p = 0; p < n; ++p) observe(players[p], inboxes[p]);

    recorder.record(outcome);
    if (keep_history) result.turns.push_back(std::move(outcome));
  }

  result.record = std::move(recorder).finish(episode_metadata(config, alpha, seed));
  result.players = std::move(players);
  return result;
}

RunRecord run_episode(const ExperimentConfig& config, double alpha, std::uint64_t seed) {
  return simulate_episode(config, alpha, seed).record;
}

std::vector<std::size_t> checkpoint_turns(const ExperimentConfig& config) {
  std::vector<std::size_t> out;
  for (std::size_t t = config.checkpoint_every; t < config.turns;
       t += config.checkpoint_every) {
    out.push_back(t);
  }
  out.push_back(config.turns);
  return out;
}

SampleGrid run_grid(const ExperimentConfig& config,
                    const std::vector<std::size_t>& checkpoints) {
  validate(config);
  for (std::size_t t : checkpoints) {
    if (t < 1 || t > config.turns) {
      throw ConfigError("checkpoint turn outside [1, turns]");
    }
  }

  const std::size_t n_alpha = config.alphas.size();
  const std::size_t reps = config.repetitions;
  SampleGrid grid(n_alpha, std::vector<std::vector<CheckpointSample>>(reps));

  auto run_one = [&](std::size_t job) {
    const std::size_t a = job / reps;
    const std::size_t r = job % reps;
    const RunRecord rec =
        run_episode(config, config.alphas[a], episode_seed(config.base_seed, a, r));
    auto& row = grid[a][r];
    row.reserve(checkpoints.size());
    for (std::size_t t : checkpoints) {
      const std::size_t k = t - 1;
      row.push_back(CheckpointSample{
          .regret_occupancy = rec.regret_occupancy[k],
          .regret_literal = rec.regret_literal[k],
          .reward = static_cast<double>(rec.cumulative_reward[k]),
          .loss = static_cast<double>(rec.cumulative_loss[k]),
      });
    }
  };

  const std::size_t jobs = n_alpha * reps;
  std::size_t workers = config.threads == 0 ? std::thread::hardware_concurrency()
                                            : config.threads;
  workers = std::clamp<std::size_t>(workers, 1, jobs);

  if (workers == 1) {
    for (std::size_t job = 0; job < jobs; ++job) run_one(job);
    return grid;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t job = next++; job < jobs; job = next++) {
          try {
            run_one(job);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

std::vector<AggregateRecord> aggregate(const ExperimentConfig& config,
                                       const std::vector<std::size_t>& checkpoints,
                                       const SampleGrid& samples) {
  struct Moments {
    double mean = 0.0;
    double std = 0.0;
  };
  auto moments = [](const std::vector<double>& xs) {
    Moments m;
    for (double x : xs) m.mean += x;
    m.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
      double ss = 0.0;
      for (double x : xs) ss += (x - m.mean) * (x - m.mean);
      m.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return m;
  };

  std::vector<AggregateRecord> out;
  for (std::size_t a = 0; a < samples.size(); ++a) {
    const auto& reps = samples[a];
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
      std::vector<double> occ, lit, reward, loss;
      for (const auto& rep : reps) {
        occ.push_back(rep[c].regret_occupancy);
        lit.push_back(rep[c].regret_literal);
        reward.push_back(rep[c].reward);
        loss.push_back(rep[c].loss);
      }
      const auto mo = moments(occ);
      const auto ml = moments(lit);
      out.push_back(AggregateRecord{
          .algorithm = config.algorithm,
          .alpha = config.alphas[a],
          .turn = checkpoints[c],
          .repetitions = reps.size(),
          .regret_occupancy_mean = mo.mean,
          .regret_occupancy_std = mo.std,
          .regret_literal_mean = ml.mean,
          .regret_literal_std = ml.std,
          .reward_mean = moments(reward).mean,
          .loss_mean = moments(loss).mean,
          .seed_base = config.base_seed,
      });
    }
  }
  return out;
}

std::vector<AggregateRecord> sweep_alpha(const ExperimentConfig& config) {
  const std::vector<std::size_t> final_turn{config.turns};
  return aggregate(config, final_turn, run_grid(config, final_turn));
}

std::vector<AggregateRecord> regret_vs_turns(const ExperimentConfig& config) {
  validate(config);
  const auto checkpoints = checkpoint_turns(config);
  return aggregate(config, checkpoints, run_grid(config, checkpoints));
}

}  // namespace mpbandit
