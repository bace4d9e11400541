#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swaf/deployer.hpp"
#include "swaf/formulation.hpp"
#include "swaf/problem.hpp"
#include "swaf/rng.hpp"
#include "swaf/rule_spec.hpp"
#include "swaf/rules.hpp"
#include "swaf/types.hpp"

namespace swaf {

enum class Formulation {
  bch,  // feasibility-first comparison
  acr,  // feasibility-first with adaptive constraint relaxing
};

struct SwarmConfig {
  std::size_t n_agents = 70;
  std::size_t max_cycles = 2000;
  RuleSpec rule = DepsRule{};
  Formulation formulation = Formulation::bch;
  std::optional<AcrParams> acr;  // AcrParams::defaults_for(max_cycles) if unset
  std::uint64_t seed = 0;

  /// Throws ConfigError on an unusable configuration.
  void validate() const;

  AcrParams acr_params() const { return acr ? *acr : AcrParams::defaults_for(max_cycles); }
};

/// Index of the best point under `cmp`; ties go to the lowest index.
/// Throws StateError on an empty set.
std::size_t best_index(std::span<const KnowledgePoint> points, const Comparator& cmp);

inline const KnowledgePoint& best_of(std::span<const KnowledgePoint> points,
                                     const Comparator& cmp) {
  return points[best_index(points, cmp)];
}

/// Shared repository: every agent's published personal best, the incumbent
/// and, under relaxing, the threshold controller state.
struct Blackboard {
  std::vector<KnowledgePoint> published;
  std::size_t incumbent_index = 0;
  std::optional<AcrState> acr;

  const KnowledgePoint& incumbent() const { return published[incumbent_index]; }
};

struct Agent {
  std::size_t id = 0;
  PsMemory memory;  // memory.p mirrors the agent's blackboard entry
  std::optional<DeployerNetwork> deployer;
  RuleId active_rule;
};

struct RunResult {
  Vector solution;            // boundary-mapped final incumbent
  GoodnessPair goodness;      // minimization sign
  double objective = 0.0;     // reported sign
  bool feasible = false;
  std::uint64_t evaluations = 0;          // N * T, excluding initialization
  std::uint64_t initial_evaluations = 0;  // N
  std::size_t agents = 0;
  /// Goodness of the feasibility-first best published point after each
  /// cycle; entry 0 is the initial population.
  std::vector<GoodnessPair> history;
  /// Relaxation threshold after each cycle (entry 0 initial); empty without ACR.
  std::vector<double> epsilon_history;
};

/// A running swarm. Construction samples and evaluates the initial
/// population; each step() runs one learning cycle in which every agent, in
/// index order, generates and tests one point and publishes immediately.
class Swarm {
 public:
  /// Throws ConfigError on an invalid configuration.
  Swarm(Problem problem, SwarmConfig config);

  /// Run cycle t = cycle() + 1. Throws StateError past max_cycles.
  void step();

  /// Step until max_cycles and return the result.
  RunResult run_to_end();

  std::size_t cycle() const { return t_; }
  const SwarmConfig& config() const { return config_; }
  const Problem& problem() const { return problem_; }
  const Blackboard& blackboard() const { return board_; }
  std::span<const Agent> agents() const { return agents_; }
  Comparator comparator() const { return comparator_; }

  /// Raw evaluations made by learning cycles (initialization excluded).
  std::uint64_t cycle_evaluations() const { return problem_.eval_counter() - initial_evals_; }

  RunResult result() const;

 private:
  RuleId select_rule(Agent& agent);
  double rank_fraction(std::size_t agent) const;
  void publish(std::size_t agent);
  void record_history();

  Problem problem_;
  SwarmConfig config_;
  AcrParams acr_params_;
  RngStream rng_;
  Comparator comparator_;
  Blackboard board_;
  std::vector<Agent> agents_;
  std::size_t t_ = 0;
  std::uint64_t initial_evals_ = 0;
  std::vector<GoodnessPair> history_;
  std::vector<double> epsilon_history_;
};

/// Execute a full run on a private copy of `problem`.
RunResult run(const Problem& problem, const SwarmConfig& config);

}  // namespace swaf
