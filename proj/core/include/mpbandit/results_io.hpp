#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpbandit/config.hpp"
#include "mpbandit/experiment.hpp"

namespace mpbandit {

/// Column order of every CSV result file.
inline constexpr std::string_view kCsvHeader =
    "algorithm,alpha,turn,repetitions,regret_occupancy_mean,regret_occupancy_std,"
    "regret_literal_mean,regret_literal_std,reward_mean,loss_mean,seed_base";

/// Header plus one row per record. Real-valued fields carry 6 significant
/// digits; turn, repetitions and seed_base are written as exact integers.
std::string format_csv(std::span<const AggregateRecord> records);

/// {"config": <echo>, "records": [...]}, one object per record with the CSV
/// column names as keys and the same 6-digit rounding.
std::string format_json(std::span<const AggregateRecord> records,
                        const ExperimentConfig& config);

/// Inverse of format_csv. Throws std::runtime_error on a malformed file.
std::vector<AggregateRecord> parse_csv(std::string_view text);

/// Writes records to `path` ("-" for stdout). A CSV written to a file gets a
/// `<path>.config.json` sidecar holding the config echo. Throws
/// std::invalid_argument on empty records and std::runtime_error naming the
/// path when it cannot be written.
void emit_results(std::span<const AggregateRecord> records, OutputFormat format,
                  const std::string& path, const ExperimentConfig& config);

}  // namespace mpbandit
