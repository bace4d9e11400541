#include "swaf/rule_spec.hpp"

#include <cmath>
#include <sstream>

#include "swaf/errors.hpp"
#include "swaf/text.hpp"

namespace swaf {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct WeightedList {
  std::vector<RuleId> rules;
  std::vector<double> weights;
};

WeightedList parse_list(std::string_view body, std::string_view whole) {
  WeightedList out;
  if (body == "cr-sweep") {
    out.rules = cr_sweep_rules();
    out.weights.assign(out.rules.size(), 1.0);
    return out;
  }
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ConfigError("rule '" + std::string(whole) + "': expected a [..] list");
  }
  body = body.substr(1, body.size() - 2);
  for (std::size_t start = 0;;) {
    const auto pos = body.find(',', start);
    std::string_view item = body.substr(start, pos - start);
    double weight = 1.0;
    if (const auto at = item.find('@'); at != std::string_view::npos) {
      const auto w = parse_double(item.substr(at + 1));
      if (!w || !(*w >= 0.0)) {
        throw ConfigError("rule '" + std::string(whole) + "': bad weight in '" +
                          std::string(item) + "'");
      }
      weight = *w;
      item = item.substr(0, at);
    }
    if (item.empty()) {
      throw ConfigError("rule '" + std::string(whole) + "': empty list element");
    }
    out.rules.push_back(parse_rule_id(item));
    out.weights.push_back(weight);
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

DepsRule parse_deps(std::string_view params, std::string_view whole) {
  DepsRule deps;
  double c1 = 2.05;
  double c2 = 2.05;
  for (std::size_t start = 0; start < params.size();) {
    const auto pos = params.find(':', start);
    const std::string_view kv = params.substr(start, pos - start);
    const auto eq = kv.find('=');
    const auto value = eq == std::string_view::npos ? std::nullopt : parse_double(kv.substr(eq + 1));
    if (!value) {
      throw ConfigError("rule '" + std::string(whole) + "': bad parameter '" + std::string(kv) +
                        "'");
    }
    const std::string_view key = kv.substr(0, eq);
    if (key == "CR") {
      deps.de.cr = *value;
    } else if (key == "SF") {
      deps.de.sf = *value;
    } else if (key == "NV") {
      if (*value != std::floor(*value) || !(std::abs(*value) <= 1e6)) {
        throw ConfigError("rule '" + std::string(whole) + "': NV must be a small integer");
      }
      deps.de.n_v = static_cast<int>(*value);
    } else if (key == "C1") {
      c1 = *value;
    } else if (key == "C2") {
      c2 = *value;
    } else {
      throw ConfigError("rule '" + std::string(whole) + "': unknown parameter '" +
                        std::string(key) + "'");
    }
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  try {
    deps.de.validate();
    deps.ps = PsParams(c1, c2);
  } catch (const ArgumentError& err) {
    throw ConfigError("rule '" + std::string(whole) + "': " + err.what());
  }
  return deps;
}

std::string join(const std::vector<RuleId>& rules, const std::vector<double>* weights) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rules.size(); ++i) {
    out << (i ? "," : "") << to_string(rules[i]);
    if (weights && (*weights)[i] != 1.0) {
      out << '@' << format_double((*weights)[i]);
    }
  }
  out << ']';
  return out.str();
}

}  // namespace

std::vector<RuleId> cr_sweep_rules() {
  std::vector<RuleId> out;
  for (int k = 0; k <= 10; ++k) {
    DeParams p;
    p.cr = k / 10.0;
    out.emplace_back(DeRule{p});
  }
  return out;
}

RuleSpec parse_rule_spec(std::string_view text, const DeployerParams& nn_defaults) {
  if (text.starts_with("deps")) {
    if (text == "deps") {
      return DepsRule{};
    }
    if (text[4] != ':' || text.size() == 5) {
      throw ConfigError("unknown rule '" + std::string(text) + "'");
    }
    return parse_deps(text.substr(5), text);
  }
  if (text.starts_with("rc:")) {
    auto list = parse_list(text.substr(3), text);
    RandomCombination rc{std::move(list.rules), std::move(list.weights)};
    double total = 0.0;
    for (double w : rc.weights) total += w;
    if (!(total > 0.0)) {
      throw ConfigError("rule '" + std::string(text) + "': weights sum to zero");
    }
    return rc;
  }
  if (text.starts_with("nn:")) {
    auto list = parse_list(text.substr(3), text);
    AdaptiveDeployment nn{std::move(list.rules), nn_defaults};
    nn.params.n_outputs = nn.rules.size();
    try {
      nn.params.validate();
    } catch (const ArgumentError& err) {
      throw ConfigError("rule '" + std::string(text) + "': " + err.what());
    }
    return nn;
  }
  return FixedRule{parse_rule_id(text)};
}

std::string to_string(const RuleSpec& spec) {
  return std::visit(
      Overloaded{
          [](const FixedRule& f) { return to_string(f.rule); },
          [](const DepsRule& d) {
            std::string out = "deps:CR=" + format_double(d.de.cr);
            if (d.de.sf != 0.5 || d.de.n_v != 2) {
              out += ":SF=" + format_double(d.de.sf) + ":NV=" + std::to_string(d.de.n_v);
            }
            if (d.ps.c1() != 2.05 || d.ps.c2() != 2.05) {
              out += ":C1=" + format_double(d.ps.c1()) + ":C2=" + format_double(d.ps.c2());
            }
            return out;
          },
          [](const RandomCombination& rc) { return "rc:" + join(rc.rules, &rc.weights); },
          [](const AdaptiveDeployment& nn) { return "nn:" + join(nn.rules, nullptr); },
      },
      spec);
}

}  // namespace swaf
