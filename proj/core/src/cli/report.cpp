#include "innerdyn/cli/report.hpp"

#include <fstream>

#include "innerdyn/errors.hpp"

namespace innerdyn::cli {

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) throw Error("cannot write '" + path.string() + "'");
}

}  // namespace

std::string format_number(const BigReal& x) { return x.to_string(kReportDigits); }

Json ExperimentReport::summary() const {
  Json doc = Json::object();
  doc["schema"] = 1;
  doc["kind"] = to_string(config.kind());
  Json echo = Json::object();
  echo["schema"] = config.text("schema");
  echo["kind"] = config.text("kind");
  for (const auto& [key, value] : config.values()) {
    if (key != "schema" && key != "kind") echo[key] = value;
  }
  doc["config"] = std::move(echo);
  doc["results"] = results;
  Json names = Json::array();
  for (const auto& [name, s] : series) names.push_back(name);
  doc["series"] = std::move(names);
  doc["health"] = {{"healthy", healthy}, {"rejected", rejected}, {"max_bits_used", max_bits_used}};
  Json errs = Json::array();
  for (const ReportError& e : errors) {
    Json item = Json::object();
    item["sample"] = e.sample ? Json(*e.sample) : Json(nullptr);
    item["step"] = e.step ? Json(*e.step) : Json(nullptr);
    item["message"] = e.message;
    errs.push_back(std::move(item));
  }
  doc["errors"] = std::move(errs);
  if (outcomes) doc["outcomes"] = *outcomes;
  return doc;
}

std::string emit_plot_data(const ExperimentReport& report, const std::string& series) {
  const auto it = report.series.find(series);
  if (it == report.series.end()) throw UnknownSeries("no series named '" + series + "' in this report");
  std::string out = "n";
  for (const std::string& c : it->second.columns) out += "," + c;
  out += "\n";
  for (const auto& [n, values] : it->second.rows) {
    out += std::to_string(n);
    for (const BigReal& v : values) out += "," + format_number(v);
    out += "\n";
  }
  return out;
}

void write_report(const ExperimentReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory '" + dir.string() + "': " + ec.message());
  write_file(dir / "summary.json", report.summary().dump(2) + "\n");
  for (const auto& [name, s] : report.series) write_file(dir / ("series_" + name + ".csv"), emit_plot_data(report, name));
}

}  // namespace innerdyn::cli
