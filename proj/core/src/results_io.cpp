#include "mpbandit/results_io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mpbandit {

namespace {

std::string sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double rounded6(double v) { return std::stod(sig6(v)); }

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == line.npos ? line.npos : next - pos));
    if (next == line.npos) break;
    pos = next + 1;
  }
  return out;
}

template <typename T>
T parse_field(std::string_view text, std::string_view column) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error("bad value '" + std::string(text) + "' in column " +
                             std::string(column));
  }
  return v;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open output file " + path + ": " +
                             std::strerror(errno));
  }
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing output file " + path);
}

}  // namespace

std::string format_csv(std::span<const AggregateRecord> records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += policy_name(r.algorithm);
    for (const std::string& field :
         {sig6(r.alpha), std::to_string(r.turn), std::to_string(r.repetitions),
          sig6(r.regret_occupancy_mean), sig6(r.regret_occupancy_std),
          sig6(r.regret_literal_mean), sig6(r.regret_literal_std),
          sig6(r.reward_mean), sig6(r.loss_mean), std::to_string(r.seed_base)}) {
      out += ',';
      out += field;
    }
    out += '\n';
  }
  return out;
}

std::string format_json(std::span<const AggregateRecord> records,
                        const ExperimentConfig& config) {
  nlohmann::ordered_json doc;
  doc["config"] = nlohmann::ordered_json::parse(config_to_json(config));
  auto& rows = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json row;
    row["algorithm"] = std::string(policy_name(r.algorithm));
    row["alpha"] = rounded6(r.alpha);
    row["turn"] = r.turn;
    row["repetitions"] = r.repetitions;
    row["regret_occupancy_mean"] = rounded6(r.regret_occupancy_mean);
    row["regret_occupancy_std"] = rounded6(r.regret_occupancy_std);
    row["regret_literal_mean"] = rounded6(r.regret_literal_mean);
    row["regret_literal_std"] = rounded6(r.regret_literal_std);
    row["reward_mean"] = rounded6(r.reward_mean);
    row["loss_mean"] = rounded6(r.loss_mean);
    row["seed_base"] = r.seed_base;
    rows.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::vector<AggregateRecord> parse_csv(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) {
    throw std::runtime_error("CSV header does not match the result format");
  }
  const auto columns = split(kCsvHeader, ',');
  std::vector<AggregateRecord> out;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto f = split(lines[li], ',');
    if (f.size() != columns.size()) {
      throw std::runtime_error("CSV line " + std::to_string(li + 1) + " has " +
                               std::to_string(f.size()) + " fields");
    }
    AggregateRecord r;
    r.algorithm = parse_policy_kind(f[0]);
    r.alpha = parse_field<double>(f[1], columns[1]);
    r.turn = parse_field<std::size_t>(f[2], columns[2]);
    r.repetitions = parse_field<std::size_t>(f[3], columns[3]);
    r.regret_occupancy_mean = parse_field<double>(f[4], columns[4]);
    r.regret_occupancy_std = parse_field<double>(f[5], columns[5]);
    r.regret_literal_mean = parse_field<double>(f[6], columns[6]);
    r.regret_literal_std = parse_field<double>(f[7], columns[7]);
    r.reward_mean = parse_field<double>(f[8], columns[8]);
    r.loss_mean = parse_field<double>(f[9], columns[9]);
    r.seed_base = parse_field<std::uint64_t>(f[10], columns[10]);
    out.push_back(r);
  }
  return out;
}

void emit_results(std::span<const AggregateRecord> records, OutputFormat format,
                  const std::string& path, const ExperimentConfig& config) {
  if (records.empty()) throw std::invalid_argument("no records to emit");
  const std::string body = format == OutputFormat::Csv
                               ? format_csv(records)
                               : format_json(records, config);
  if (path.empty() || path == "-") {
    std::cout << body << std::flush;
    return;
  }
  write_file(path, body);
  if (format == OutputFormat::Csv) {
    write_file(path + ".config.json", config_to_json(config) + "\n");
  }
}

}  // namespace mpbandit
