#include "swaf/problem_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "swaf/catalog.hpp"
#include "swaf/errors.hpp"
#include "swaf/expression.hpp"

namespace swaf {

namespace {

struct Entry {
  std::string value;
  int line;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ConfigError("problem config line " + std::to_string(line) + ": " + what);
}

double to_double(std::string_view s, int line) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line, "expected a number, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

Bounds parse_range(std::string_view s, int line) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) {
    fail(line, "bounds must be written lower:upper");
  }
  return {to_double(parts[0], line), to_double(parts[1], line)};
}

SuccessCriterion parse_success(std::string_view s, bool constrained, int line) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) {
    fail(line, "success must be relative:<tol> or absolute:<tol>");
  }
  SuccessCriterion c;
  if (parts[0] == "relative") {
    c.mode = SuccessCriterion::Mode::relative_gap;
  } else if (parts[0] == "absolute") {
    c.mode = SuccessCriterion::Mode::absolute_gap;
  } else {
    fail(line, "unknown success mode '" + std::string(parts[0]) + "'");
  }
  c.tolerance = to_double(parts[1], line);
  if (!(c.tolerance > 0.0)) {
    fail(line, "success tolerance must be positive");
  }
  c.require_feasible = constrained;
  return c;
}

}  // namespace

Problem parse_problem_config(std::string_view text) {
  std::map<std::string, Entry> single;
  std::vector<Entry> constraints;
  std::vector<Entry> equalities;

  static const std::vector<std::string> kKeys = {
      "name",      "builtin",    "dimension", "bounds",  "objective", "epsilon_h",
      "sense",     "known_best", "optimizer", "success"};

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view l = raw;
    if (const auto hash = l.find('#'); hash != std::string_view::npos) {
      l = l.substr(0, hash);
    }
    l = trim(l);
    if (l.empty()) {
      continue;
    }
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      fail(line, "expected key = value");
    }
    const std::string key(trim(l.substr(0, eq)));
    const std::string value(trim(l.substr(eq + 1)));
    if (key == "constraint") {
      constraints.push_back({value, line});
    } else if (key == "equality") {
      equalities.push_back({value, line});
    } else if (std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end()) {
      if (single.contains(key)) {
        fail(line, "duplicate key '" + key + "'");
      }
      single[key] = {value, line};
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }

  auto get = [&](const std::string& key) -> const Entry* {
    const auto it = single.find(key);
    return it == single.end() ? nullptr : &it->second;
  };

  if (const Entry* builtin = get("builtin")) {
    for (const char* key : {"name", "dimension", "bounds", "objective", "epsilon_h", "sense",
                            "optimizer"}) {
      if (const Entry* e = get(key)) {
        fail(e->line, std::string("'") + key + "' cannot be combined with 'builtin'");
      }
    }
    if (!constraints.empty() || !equalities.empty()) {
      fail(builtin->line, "constraints cannot be combined with 'builtin'");
    }
    Problem base = make_catalog_problem(builtin->value);
    if (!get("known_best") && !get("success")) {
      return base;
    }
    std::optional<double> known_best;
    std::optional<SuccessCriterion> success;
    if (const Entry* e = get("known_best")) {
      known_best = to_double(e->value, e->line);
    }
    if (const Entry* e = get("success")) {
      success = parse_success(e->value, base.constrained(), e->line);
    }
    return base.with_targets(known_best, success);
  }

  const Entry* dim_entry = get("dimension");
  if (!dim_entry) {
    fail(line, "missing 'dimension'");
  }
  std::size_t dimension = 0;
  {
    const auto& v = dim_entry->value;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), dimension);
    if (ec != std::errc() || ptr != v.data() + v.size() || dimension == 0) {
      fail(dim_entry->line, "dimension must be a positive integer");
    }
  }

  Problem::Definition def;
  def.name = get("name") ? get("name")->value : std::string("custom");

  const Entry* bounds_entry = get("bounds");
  if (!bounds_entry) {
    fail(line, "missing 'bounds'");
  }
  const auto ranges = split(bounds_entry->value, ',');
  if (ranges.size() == 1) {
    def.bounds.assign(dimension, parse_range(ranges[0], bounds_entry->line));
  } else if (ranges.size() == dimension) {
    for (auto r : ranges) {
      def.bounds.push_back(parse_range(r, bounds_entry->line));
    }
  } else {
    fail(bounds_entry->line, "bounds list length does not match dimension");
  }

  const Entry* objective = get("objective");
  if (!objective) {
    fail(line, "missing 'objective'");
  }
  try {
    def.objective = compile_expression(objective->value, dimension);
    for (const auto& c : constraints) {
      def.constraints.push_back(compile_expression(c.value, dimension));
    }
    double eps_h = kCatalogEqualityTolerance;
    if (const Entry* e = get("epsilon_h")) {
      eps_h = to_double(e->value, e->line);
      if (!(eps_h > 0.0)) {
        fail(e->line, "epsilon_h must be positive");
      }
    }
    for (const auto& h : equalities) {
      def.constraints.push_back(convert_equality(compile_expression(h.value, dimension), eps_h));
    }
  } catch (const ConfigError& err) {
    throw ConfigError(std::string("problem config: ") + err.what());
  }

  if (const Entry* e = get("sense")) {
    if (e->value == "minimize") {
      def.sense = Sense::minimize;
    } else if (e->value == "maximize") {
      def.sense = Sense::maximize;
    } else {
      fail(e->line, "sense must be minimize or maximize");
    }
  }
  if (const Entry* e = get("known_best")) {
    def.known_best = to_double(e->value, e->line);
  }
  if (const Entry* e = get("optimizer")) {
    Vector x;
    for (auto part : split(e->value, ',')) {
      x.push_back(to_double(part, e->line));
    }
    if (x.size() != dimension) {
      fail(e->line, "optimizer length does not match dimension");
    }
    def.known_optimizer = std::move(x);
  }
  if (const Entry* e = get("success")) {
    def.success = parse_success(e->value, !def.constraints.empty(), e->line);
  }

  try {
    return Problem(std::move(def));
  } catch (const ArgumentError& err) {
    throw ConfigError(std::string("problem config: ") + err.what());
  }
}

Problem load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open problem file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_config(buf.str());
}

}  // namespace swaf
