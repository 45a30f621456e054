// Command-line front end: runs alpha sweeps and regret-vs-turns curves and
// writes aggregated results as CSV or JSON.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mpbandit/config.hpp"
#include "mpbandit/error.hpp"
#include "mpbandit/experiment.hpp"
#include "mpbandit/results_io.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::string> algorithm;
  std::optional<std::string> alpha;
  std::optional<std::size_t> turns;
  std::optional<std::size_t> reps;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> means;
  std::optional<std::size_t> players;
  std::optional<double> epsilon0;
  std::optional<double> decay;
  std::optional<double> clamp_floor;
  std::optional<std::string> init_order;
  std::optional<std::size_t> checkpoint_every;
  std::optional<std::size_t> threads;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

void add_flags(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config_path, "JSON experiment configuration")
      ->check(CLI::ExistingFile);
  cmd.add_option("--algorithm", o.algorithm, "ucb1|egreedy|thompson|asympopt|random");
  cmd.add_option("--alpha", o.alpha, "connectivity value or comma list");
  cmd.add_option("--turns", o.turns, "turns per episode");
  cmd.add_option("--reps", o.reps, "repetitions per alpha");
  cmd.add_option("--seed", o.seed, "base seed");
  cmd.add_option("--means", o.means, "comma list of arm means");
  cmd.add_option("--players", o.players, "number of players");
  cmd.add_option("--epsilon0", o.epsilon0, "initial exploration probability");
  cmd.add_option("--decay", o.decay, "per-turn epsilon decay k in (0,1)");
  cmd.add_option("--clamp-floor", o.clamp_floor, "lower clamp on observed means");
  cmd.add_option("--init-order", o.init_order, "sequential|random");
  cmd.add_option("--checkpoint-every", o.checkpoint_every, "regret-curve spacing");
  cmd.add_option("--threads", o.threads, "worker threads (0 = all cores)");
  cmd.add_option("--out", o.out, "output path, - for stdout");
  cmd.add_option("--format", o.format, "csv|json");
}

mpbandit::ExperimentConfig build_config(const Overrides& o) {
  using namespace mpbandit;
  ExperimentConfig c = o.config_path.empty() ? ExperimentConfig{} : load_config(o.config_path);
  if (o.algorithm) c.algorithm = parse_policy_kind(*o.algorithm);
  if (o.alpha) c.alphas = parse_number_list(*o.alpha);
  if (o.turns) c.turns = *o.turns;
  if (o.reps) c.repetitions = *o.reps;
  if (o.seed) c.base_seed = *o.seed;
  if (o.means) c.means = parse_number_list(*o.means);
  if (o.players) c.n_players = *o.players;
  if (o.epsilon0) c.epsilon0 = *o.epsilon0;
  if (o.decay) c.decay = *o.decay;
  if (o.clamp_floor) c.clamp_floor = *o.clamp_floor;
  if (o.init_order) {
    if (*o.init_order == "sequential") {
      c.init_order = InitOrder::Sequential;
    } else if (*o.init_order == "random") {
      c.init_order = InitOrder::RandomPerPlayer;
    } else {
      throw ConfigError("init-order: expected sequential|random");
    }
  }
  if (o.checkpoint_every) c.checkpoint_every = *o.checkpoint_every;
  if (o.threads) c.threads = *o.threads;
  if (o.out) c.output = *o.out;
  if (o.format) c.format = parse_output_format(*o.format);
  validate(c);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-player bandit simulator with per-turn random communication graphs"};
  app.require_subcommand(1);

  Overrides sweep_flags;
  Overrides curve_flags;
  auto* sweep = app.add_subcommand("sweep-alpha", "final-turn regret for each alpha");
  auto* curve = app.add_subcommand("regret-curve", "regret at turn checkpoints");
  add_flags(*sweep, sweep_flags);
  add_flags(*curve, curve_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    const bool is_sweep = sweep->parsed();
    const auto config = build_config(is_sweep ? sweep_flags : curve_flags);
    const auto records = is_sweep ? mpbandit::sweep_alpha(config)
                                  : mpbandit::regret_vs_turns(config);
    mpbandit::emit_results(records, config.format, config.output, config);
  } catch (const mpbandit::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
