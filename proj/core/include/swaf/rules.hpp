#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swaf/errors.hpp"
#include "swaf/formulation.hpp"
#include "swaf/rng.hpp"
#include "swaf/types.hpp"

namespace swaf {

/// Clerc-Kennedy constriction factor for phi = c1 + c2 > 4.
double constriction_factor(double c1, double c2);

/// Particle-swarm rule parameters. The constriction factor is derived.
class PsParams {
 public:
  PsParams() : PsParams(2.05, 2.05) {}
  /// Throws ArgumentError unless c1 + c2 > 4.
  PsParams(double c1, double c2);

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double cf() const { return cf_; }

  friend bool operator==(const PsParams&, const PsParams&) = default;

 private:
  double c1_;
  double c2_;
  double cf_;
};

struct DeParams {
  double cr = 0.9;  // crossover rate, [0, 1]
  double sf = 0.5;  // scale factor, (0, 1.2)
  int n_v = 2;      // difference vectors per mutation

  void validate() const;

  friend bool operator==(const DeParams&, const DeParams&) = default;
};

/// Declarative memory of the particle-swarm rule: previous and current
/// position (private) and the personal best (published).
struct PsMemory {
  Vector o_ps;
  Vector x_ps;
  KnowledgePoint p;
};

/// Fresh memory from an initial evaluated point; starts with zero velocity.
PsMemory init_ps_memory(const KnowledgePoint& initial);

struct PsRule {
  PsParams params;
  friend bool operator==(const PsRule&, const PsRule&) = default;
};

struct DeRule {
  DeParams params;
  friend bool operator==(const DeRule&, const DeRule&) = default;
};

/// A single generate-and-test rule with its parameter binding.
using RuleId = std::variant<PsRule, DeRule>;

/// "ps", "ps:C1=2.05:C2=2.05", "de:CR=0.9", "de:CR=0.9:SF=0.5:NV=2".
/// Throws ConfigError on malformed text or invalid parameters.
RuleId parse_rule_id(std::string_view text);
std::string to_string(const RuleId& rule);

/// Constricted particle-swarm proposal. Per dimension, two fresh uniform draws
/// weight the pulls toward the personal best and the incumbent:
///   x' = x + cf * (v + c1*U*(p - x) + c2*U*(g - x)),  v = x - o.
template <UniformSource R>
Vector ps_generate(const PsMemory& mem, const KnowledgePoint& g, const PsParams& params, R& rng) {
  const std::size_t dim = mem.x_ps.size();
  Vector out(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    const double x = mem.x_ps[d];
    const double v = x - mem.o_ps[d];
    const double u1 = rng.uniform_real();
    const double u2 = rng.uniform_real();
    const double velocity =
        params.cf() * (v + params.c1() * u1 * (mem.p.x[d] - x) + params.c2() * u2 * (g.x[d] - x));
    out[d] = x + velocity;
  }
  return out;
}

struct DeProposal {
  Vector x;
  std::vector<bool> mutated;  // dimensions assigned from the mutation formula
};

/// Differential-evolution proposal around the incumbent `g`:
/// start from a copy of `p_self`, pick a forced dimension DR, then every
/// dimension with U < CR (and DR always) becomes g_d + SF * sum of N_V
/// difference vectors drawn from `pool` with replacement.
/// Throws ConfigError if the pool holds fewer than two points.
template <UniformSource R>
DeProposal de_propose(const KnowledgePoint& p_self, const KnowledgePoint& g,
                      std::span<const KnowledgePoint> pool, const DeParams& params, R& rng) {
  if (pool.size() < 2) {
    throw ConfigError("de_generate: need at least two published points");
  }
  const std::size_t dim = p_self.x.size();
  const auto forced = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(dim) - 1));

  Vector delta(dim, 0.0);
  const auto last = static_cast<std::int64_t>(pool.size()) - 1;
  for (int k = 0; k < params.n_v; ++k) {
    const auto& a = pool[static_cast<std::size_t>(rng.uniform_int(0, last))].x;
    const auto& b = pool[static_cast<std::size_t>(rng.uniform_int(0, last))].x;
    for (std::size_t d = 0; d < dim; ++d) {
      delta[d] += a[d] - b[d];
    }
  }

  DeProposal out{p_self.x, std::vector<bool>(dim, false)};
  for (std::size_t d = 0; d < dim; ++d) {
    if (rng.uniform_real() < params.cr || d == forced) {
      out.x[d] = g.x[d] + params.sf * delta[d];
      out.mutated[d] = true;
    }
  }
  return out;
}

template <UniformSource R>
Vector de_generate(const KnowledgePoint& p_self, const KnowledgePoint& g,
                   std::span<const KnowledgePoint> pool, const DeParams& params, R& rng) {
  return de_propose(p_self, g, pool, params, rng).x;
}

/// Test rule: adopt `candidate` as the personal best when it compares
/// better-or-equal. Returns true when `best` was replaced.
bool test_update(KnowledgePoint& best, const KnowledgePoint& candidate, const Comparator& cmp);

/// Particle-swarm test rule: shift positions (o <- x, x <- candidate)
/// unconditionally, then apply the personal-best test.
bool test_update(PsMemory& mem, const KnowledgePoint& candidate, const Comparator& cmp);

/// Determinate DE/PS alternation: DE on odd cycles, PS on even (t from 1).
struct DepsRule {
  DeParams de;
  PsParams ps;

  friend bool operator==(const DepsRule&, const DepsRule&) = default;
};

RuleId deps_select(const DepsRule& deps, std::size_t t);

/// Index k chosen with probability weights[k] / sum(weights).
/// Throws ArgumentError on negative or non-finite weights or a zero sum.
template <UniformSource R>
std::size_t rc_select(std::span<const double> weights, R& rng) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ArgumentError("rc_select: weights must be finite and non-negative");
    }
    total += w;
  }
  if (!(total > 0.0)) {
    throw ArgumentError("rc_select: weights sum to zero");
  }
  const double target = rng.uniform_real() * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] <= 0.0) {
      continue;
    }
    last_positive = k;
    acc += weights[k];
    if (target < acc) {
      return k;
    }
  }
  return last_positive;
}

}  // namespace swaf
