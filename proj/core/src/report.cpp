#include "swaf/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "swaf/catalog.hpp"
#include "swaf/errors.hpp"
#include "swaf/text.hpp"

namespace swaf {

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::optional<double> read_opt(const std::string& field, std::size_t line) {
  if (field.empty()) {
    return std::nullopt;
  }
  const auto v = parse_double(field);
  if (!v) {
    throw ConfigError("results CSV line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return v;
}

double read_req(const std::string& field, std::size_t line) {
  const auto v = read_opt(field, line);
  if (!v) {
    throw ConfigError("results CSV line " + std::to_string(line) + ": missing value");
  }
  return *v;
}

std::string cell(const std::optional<double>& v, int precision) {
  if (!v) return "-";
  std::ostringstream s;
  s << std::setprecision(precision) << *v;
  return s.str();
}

}  // namespace

ResultRow to_row(const ExperimentResult& r) {
  return ResultRow{
      .problem = r.problem,
      .rule = r.rule,
      .formulation = r.formulation,
      .agents = r.agents,
      .cycles = r.cycles,
      .runs = r.stats.runs,
      .known_best = r.known_best,
      .mean = r.stats.mean,
      .best = r.stats.best,
      .worst = r.stats.worst,
      .stddev = r.stats.stddev,
      .success_rate = r.stats.success_rate,
      .mean_te = r.stats.mean_te,
      .feasibility_rate = r.stats.feasibility_rate,
  };
}

void write_results_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << kResultsCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.problem << ',' << quote(r.rule) << ',' << r.formulation << ',' << r.agents << ','
        << r.cycles << ',' << r.runs << ',' << opt(r.known_best) << ',' << opt(r.mean) << ','
        << opt(r.best) << ',' << opt(r.worst) << ',' << opt(r.stddev) << ','
        << format_double(r.success_rate) << ',' << opt(r.mean_te) << ','
        << format_double(r.feasibility_rate) << '\n';
  }
}

std::vector<ResultRow> read_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != split_csv_line(std::string(kResultsCsvHeader))) {
    throw ConfigError("results CSV: unexpected header");
  }
  std::vector<ResultRow> rows;
  std::size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 14) {
      throw ConfigError("results CSV line " + std::to_string(n) + ": expected 14 fields");
    }
    ResultRow r;
    r.problem = f[0];
    r.rule = f[1];
    r.formulation = f[2];
    r.agents = static_cast<std::size_t>(read_req(f[3], n));
    r.cycles = static_cast<std::size_t>(read_req(f[4], n));
    r.runs = static_cast<std::size_t>(read_req(f[5], n));
    r.known_best = read_opt(f[6], n);
    r.mean = read_opt(f[7], n);
    r.best = read_opt(f[8], n);
    r.worst = read_opt(f[9], n);
    r.stddev = read_opt(f[10], n);
    r.success_rate = read_req(f[11], n);
    r.mean_te = read_opt(f[12], n);
    r.feasibility_rate = read_req(f[13], n);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_summary(std::ostream& out, std::span<const ResultRow> rows) {
  const auto order = table_row_order();
  auto position = [&](const std::string& name) {
    const auto it = std::find(order.begin(), order.end(), name);
    return static_cast<std::size_t>(it - order.begin());
  };
  std::vector<const ResultRow*> sorted;
  for (const auto& r : rows) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [&](const ResultRow* a, const ResultRow* b) {
    return position(a->problem) < position(b->problem);
  });

  out << std::left << std::setw(6) << "F" << std::setw(12) << "F*" << std::setw(26) << "rule"
      << std::setw(5) << "R_F" << std::setw(14) << "mean" << std::setw(14) << "best"
      << std::setw(14) << "worst" << std::setw(12) << "stddev" << std::setw(9) << "success"
      << std::setw(9) << "feasible" << "mean T_E\n";
  for (const ResultRow* r : sorted) {
    std::ostringstream success;
    success << std::setprecision(3) << r->success_rate;
    std::ostringstream feasible;
    feasible << std::setprecision(3) << r->feasibility_rate;
    out << std::left << std::setw(6) << r->problem << std::setw(12) << cell(r->known_best, 8)
        << std::setw(26) << r->rule << std::setw(5) << r->formulation << std::setw(14)
        << cell(r->mean, 9) << std::setw(14) << cell(r->best, 9) << std::setw(14)
        << cell(r->worst, 9) << std::setw(12) << cell(r->stddev, 3) << std::setw(9)
        << success.str() << std::setw(9) << feasible.str() << cell(r->mean_te, 6) << '\n';
  }
}

void write_trace_csv(std::ostream& out, std::span<const TraceColumn> columns) {
  std::size_t length = 0;
  out << "cycle";
  for (const auto& c : columns) {
    out << ',' << quote(c.label);
    length = std::max(length, c.values.size());
  }
  out << '\n';
  for (std::size_t t = 0; t < length; ++t) {
    out << t;
    for (const auto& c : columns) {
      out << ',';
      if (t < c.values.size()) out << format_double(c.values[t]);
    }
    out << '\n';
  }
}

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& body) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  body(out);
  out.flush();
  if (!out) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

}  // namespace swaf
