#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mpbandit/policies.hpp"

namespace mpbandit {

enum class OutputFormat { Csv, Json };

std::string_view format_name(OutputFormat format) noexcept;
OutputFormat parse_output_format(std::string_view name);

/// Arm means used by the bundled experiments: a wide spread with a clear
/// top five, and a clustered set where the top five sit close together.
std::vector<double> spread_means();
std::vector<double> clustered_means();

/// 0, 0.1, ..., 1.0
std::vector<double> default_alpha_sweep();

struct ExperimentConfig {
  std::vector<double> means = spread_means();
  std::size_t n_players = 5;
  PolicyKind algorithm = PolicyKind::Thompson;
  std::vector<double> alphas = default_alpha_sweep();
  std::size_t turns = 5000;
  std::size_t repetitions = 50;
  std::uint64_t base_seed = 1;
  double epsilon0 = 1.0;
  double decay = 0.995;
  double clamp_floor = 1e-3;
  InitOrder init_order = InitOrder::Sequential;
  std::size_t checkpoint_every = 100;
  std::size_t threads = 1;  // 0 = hardware concurrency
  std::string output = "-";  // "-" = stdout
  OutputFormat format = OutputFormat::Csv;

  PolicyParams policy_params() const;
};

/// Throws ConfigError naming the offending field.
void validate(const ExperimentConfig& config);

/// Reads a JSON object whose keys match the ExperimentConfig fields ("alpha"
/// takes a number or a list). Missing keys keep their defaults; unknown keys
/// are rejected.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical JSON echo of every field that influences results. Output path,
/// format and thread count are left out so the echo is identical across
/// serial/concurrent runs and destinations.
std::string config_to_json(const ExperimentConfig& config);

/// Parses "0.9,0.8, 0.7" into numbers. Throws ConfigError on junk.
std::vector<double> parse_number_list(std::string_view text);

}  // namespace mpbandit
