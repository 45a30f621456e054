#include "mpbandit/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "mpbandit/bandit_env.hpp"
#include "mpbandit/error.hpp"

namespace mpbandit {

using nlohmann::json;

std::string_view format_name(OutputFormat format) noexcept {
  return format == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + std::string(name) +
                    "' (expected csv|json)");
}

std::vector<double> spread_means() {
  return {0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1, 0.01};
}

std::vector<double> clustered_means() {
  return {0.7, 0.68, 0.66, 0.64, 0.62, 0.4, 0.38, 0.36, 0.34, 0.32};
}

std::vector<double> default_alpha_sweep() {
  std::vector<double> a;
  for (int i = 0; i <= 10; ++i) a.push_back(i / 10.0);
  return a;
}

PolicyParams ExperimentConfig::policy_params() const {
  return PolicyParams{.epsilon0 = epsilon0,
                      .decay = decay,
                      .clamp_floor = clamp_floor,
                      .init_order = init_order,
                      .n_players = n_players};
}

void validate(const ExperimentConfig& config) {
  const ArmSet arms(config.means);
  arms.check_player_count(config.n_players);
  if (config.algorithm == PolicyKind::AsympOpt && config.n_players < 2) {
    throw ConfigError("n_players: asympopt needs at least 2 players");
  }
  if (config.turns < arms.size()) {
    throw ConfigError("turns: must be at least the arm count (" +
                      std::to_string(arms.size()) + ")");
  }
  if (config.repetitions < 1) throw ConfigError("repetitions: must be >= 1");
  if (config.alphas.empty()) throw ConfigError("alpha: need at least one value");
  for (double a : config.alphas) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw ConfigError("alpha: every value must lie in [0, 1]");
    }
  }
  if (config.checkpoint_every < 1) {
    throw ConfigError("checkpoint_every: must be >= 1");
  }
  validate(config.policy_params());
}

namespace {

std::string_view init_order_name(InitOrder order) {
  return order == InitOrder::Sequential ? "sequential" : "random";
}

InitOrder parse_init_order(std::string_view name) {
  if (name == "sequential") return InitOrder::Sequential;
  if (name == "random") return InitOrder::RandomPerPlayer;
  throw ConfigError("init_order: expected sequential|random");
}

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  ExperimentConfig c;
  std::optional<int> echoed_code;
  for (const auto& [key, value] : j.items()) {
    if (key == "means") {
      c.means = field<std::vector<double>>(j, "means");
    } else if (key == "n_players") {
      c.n_players = field<std::size_t>(j, "n_players");
    } else if (key == "algorithm") {
      c.algorithm = parse_policy_kind(field<std::string>(j, "algorithm"));
    } else if (key == "algorithm_code") {
      echoed_code = field<int>(j, "algorithm_code");
    } else if (key == "alpha") {
      c.alphas = value.is_array() ? field<std::vector<double>>(j, "alpha")
                                  : std::vector<double>{field<double>(j, "alpha")};
    } else if (key == "turns") {
      c.turns = field<std::size_t>(j, "turns");
    } else if (key == "repetitions") {
      c.repetitions = field<std::size_t>(j, "repetitions");
    } else if (key == "base_seed") {
      c.base_seed = field<std::uint64_t>(j, "base_seed");
    } else if (key == "epsilon0") {
      c.epsilon0 = field<double>(j, "epsilon0");
    } else if (key == "decay") {
      c.decay = field<double>(j, "decay");
    } else if (key == "clamp_floor") {
      c.clamp_floor = field<double>(j, "clamp_floor");
    } else if (key == "init_order") {
      c.init_order = parse_init_order(field<std::string>(j, "init_order"));
    } else if (key == "checkpoint_every") {
      c.checkpoint_every = field<std::size_t>(j, "checkpoint_every");
    } else if (key == "threads") {
      c.threads = field<std::size_t>(j, "threads");
    } else if (key == "output") {
      c.output = field<std::string>(j, "output");
    } else if (key == "format") {
      c.format = parse_output_format(field<std::string>(j, "format"));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (echoed_code && *echoed_code != policy_code(c.algorithm)) {
    throw ConfigError("algorithm_code does not match algorithm");
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_to_json(const ExperimentConfig& c) {
  json j;
  j["algorithm"] = std::string(policy_name(c.algorithm));
  j["algorithm_code"] = policy_code(c.algorithm);
  j["alpha"] = c.alphas;
  j["base_seed"] = c.base_seed;
  j["checkpoint_every"] = c.checkpoint_every;
  j["clamp_floor"] = c.clamp_floor;
  j["decay"] = c.decay;
  j["epsilon0"] = c.epsilon0;
  j["init_order"] = std::string(init_order_name(c.init_order));
  j["means"] = c.means;
  j["n_players"] = c.n_players;
  j["repetitions"] = c.repetitions;
  j["turns"] = c.turns;
  return j.dump();
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ConfigError("not a number: '" + std::string(item) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace mpbandit
