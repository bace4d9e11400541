#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swaf/experiment.hpp"

namespace swaf {

/// Fixed results CSV header. Empty fields mean "not defined" (no feasible
/// run, no successful run, no known optimum).
inline constexpr std::string_view kResultsCsvHeader =
    "problem,rule,formulation,agents,cycles,runs,known_best,mean,best,worst,stddev,"
    "success_rate,mean_te,feasibility_rate";

/// One CSV row: a problem x rule configuration.
struct ResultRow {
  std::string problem;
  std::string rule;
  std::string formulation;
  std::size_t agents = 0;
  std::size_t cycles = 0;
  std::size_t runs = 0;
  std::optional<double> known_best;
  std::optional<double> mean;
  std::optional<double> best;
  std::optional<double> worst;
  std::optional<double> stddev;
  double success_rate = 0.0;
  std::optional<double> mean_te;
  double feasibility_rate = 0.0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

ResultRow to_row(const ExperimentResult& result);

/// Numbers use shortest round-trip formatting; rule strings are quoted.
void write_results_csv(std::ostream& out, std::span<const ResultRow> rows);

/// Inverse of write_results_csv. Throws ConfigError on a bad header or row.
std::vector<ResultRow> read_results_csv(std::istream& in);

/// Fixed-width text table, problems in published table order (unknown
/// problems last, in input order).
void write_summary(std::ostream& out, std::span<const ResultRow> rows);

struct TraceColumn {
  std::string label;
  std::vector<double> values;  // index = cycle
};

/// Plot-ready trace: a `cycle` column followed by one column per label.
void write_trace_csv(std::ostream& out, std::span<const TraceColumn> columns);

/// Open `path` for writing (creating parent directories) and hand the stream
/// to `body`. Throws IoError when the file cannot be written.
void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body);

}  // namespace swaf
