#include "swaf/rules.hpp"

#include <sstream>

#include "swaf/text.hpp"

namespace swaf {

double constriction_factor(double c1, double c2) {
  const double phi = c1 + c2;
  if (!(phi > 4.0)) {
    throw ArgumentError("constriction factor requires c1 + c2 > 4");
  }
  return 2.0 / (std::sqrt(phi * (phi - 4.0)) + phi - 2.0);
}

PsParams::PsParams(double c1, double c2) : c1_(c1), c2_(c2), cf_(constriction_factor(c1, c2)) {}

void DeParams::validate() const {
  if (!(cr >= 0.0 && cr <= 1.0)) {
    throw ArgumentError("DE: CR must lie in [0, 1]");
  }
  if (!(sf > 0.0 && sf < 1.2)) {
    throw ArgumentError("DE: SF must lie in (0, 1.2)");
  }
  if (n_v < 1) {
    throw ArgumentError("DE: NV must be at least 1");
  }
}

PsMemory init_ps_memory(const KnowledgePoint& initial) {
  return PsMemory{initial.x, initial.x, initial};
}

bool test_update(KnowledgePoint& best, const KnowledgePoint& candidate, const Comparator& cmp) {
  if (cmp.better_or_equal(candidate.goodness, best.goodness)) {
    best = candidate;
    return true;
  }
  return false;
}

bool test_update(PsMemory& mem, const KnowledgePoint& candidate, const Comparator& cmp) {
  mem.o_ps = std::move(mem.x_ps);
  mem.x_ps = candidate.x;
  return test_update(mem.p, candidate, cmp);
}

RuleId deps_select(const DepsRule& deps, std::size_t t) {
  if (t % 2 == 1) {
    return DeRule{deps.de};
  }
  return PsRule{deps.ps};
}

namespace {

double parse_number(std::string_view key, std::string_view text) {
  const auto v = parse_double(text);
  if (!v) {
    throw ConfigError("rule parameter " + std::string(key) + ": bad number '" +
                      std::string(text) + "'");
  }
  return *v;
}

}  // namespace

RuleId parse_rule_id(std::string_view text) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  const std::string_view kind = parts.front();

  auto for_each_param = [&](auto&& apply) {
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const auto eq = parts[i].find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("rule '" + std::string(text) + "': expected KEY=VALUE, got '" +
                          std::string(parts[i]) + "'");
      }
      apply(parts[i].substr(0, eq), parts[i].substr(eq + 1));
    }
  };

  try {
    if (kind == "ps") {
      double c1 = 2.05;
      double c2 = 2.05;
      for_each_param([&](std::string_view key, std::string_view value) {
        if (key == "C1") {
          c1 = parse_number(key, value);
        } else if (key == "C2") {
          c2 = parse_number(key, value);
        } else {
          throw ConfigError("ps rule: unknown parameter '" + std::string(key) + "'");
        }
      });
      return PsRule{PsParams(c1, c2)};
    }
    if (kind == "de") {
      DeParams p;
      for_each_param([&](std::string_view key, std::string_view value) {
        if (key == "CR") {
          p.cr = parse_number(key, value);
        } else if (key == "SF") {
          p.sf = parse_number(key, value);
        } else if (key == "NV") {
          const double nv = parse_number(key, value);
          if (nv != std::floor(nv) || !(std::abs(nv) <= 1e6)) {
            throw ConfigError("de rule: NV must be a small integer");
          }
          p.n_v = static_cast<int>(nv);
        } else {
          throw ConfigError("de rule: unknown parameter '" + std::string(key) + "'");
        }
      });
      p.validate();
      return DeRule{p};
    }
  } catch (const ArgumentError& err) {
    throw ConfigError("rule '" + std::string(text) + "': " + err.what());
  }
  throw ConfigError("unknown rule '" + std::string(text) + "' (expected ps or de)");
}

std::string to_string(const RuleId& rule) {
  std::ostringstream out;
  if (const auto* ps = std::get_if<PsRule>(&rule)) {
    out << "ps";
    if (ps->params.c1() != 2.05 || ps->params.c2() != 2.05) {
      out << ":C1=" << format_double(ps->params.c1()) << ":C2=" << format_double(ps->params.c2());
    }
  } else {
    const auto& de = std::get<DeRule>(rule).params;
    out << "de:CR=" << format_double(de.cr);
    if (de.sf != 0.5 || de.n_v != 2) {
      out << ":SF=" << format_double(de.sf) << ":NV=" << de.n_v;
    }
  }
  return out.str();
}

}  // namespace swaf
