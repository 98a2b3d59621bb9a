#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "innerdyn/cli/config.hpp"

namespace innerdyn::cli {

using Json = nlohmann::ordered_json;

/// Digits for every number written to summary.json and CSV files.
inline constexpr int kReportDigits = 40;

std::string format_number(const BigReal& x);

/// Per-n table; `columns` names the value columns after "n".
struct Series {
  std::vector<std::string> columns{"value"};
  std::vector<std::pair<long, std::vector<BigReal>>> rows;

  void add(long n, BigReal value) { rows.push_back({n, {std::move(value)}}); }
};

struct ReportError {
  std::optional<std::uint64_t> sample;
  std::optional<int> step;
  std::string message;
};

struct ExperimentReport {
  ExperimentConfig config;
  /// Scalar results in insertion order; numbers are stored as formatted strings.
  Json results = Json::object();
  std::map<std::string, Series> series;
  std::vector<ReportError> errors;
  bool healthy = true;
  std::size_t rejected = 0;
  long max_bits_used = 0;
  /// Per-sample records, present when the run is small enough (outcomes_limit).
  std::optional<Json> outcomes;

  void scalar(const std::string& name, const BigReal& value) { results[name] = format_number(value); }
  template <class T>
  void scalar(const std::string& name, const T& value) {
    results[name] = value;
  }

  /// The summary.json document. Contains no timing data, so it is byte-stable.
  Json summary() const;
};

/// CSV with header "n,<columns...>". Throws UnknownSeries.
std::string emit_plot_data(const ExperimentReport& report, const std::string& series);

/// Writes summary.json and series_<name>.csv into `dir`, creating it. Throws Error on IO failure.
void write_report(const ExperimentReport& report, const std::filesystem::path& dir);

}  // namespace innerdyn::cli
