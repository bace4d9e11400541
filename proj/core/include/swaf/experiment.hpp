#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swaf/engine.hpp"
#include "swaf/problem.hpp"

namespace swaf {

struct ExperimentConfig {
  SwarmConfig swarm;               // swarm.seed is ignored; see master_seed
  std::size_t runs = 1;
  std::uint64_t master_seed = 0;   // run r uses derive_seed(master_seed, r)
  std::optional<SuccessCriterion> success;  // problem default when unset
  std::size_t threads = 0;         // 0 = hardware concurrency
};

struct SuccessOutcome {
  bool success = false;
  /// Evaluations spent when the criterion first held (N * first cycle).
  std::optional<std::uint64_t> te;
};

/// Judge one run: gap to the known optimum within tolerance (relative, or
/// absolute when the optimum is 0) and, when required, exact feasibility.
/// Throws ConfigError when a relative criterion has no known optimum.
SuccessOutcome success_check(const RunResult& run, const Problem& problem,
                             const SuccessCriterion& criterion);

struct RunStats {
  std::size_t runs = 0;
  std::size_t feasible_runs = 0;
  std::size_t successes = 0;
  // Final reported objective over feasible runs; absent when none were.
  std::optional<double> mean;
  std::optional<double> best;
  std::optional<double> worst;
  std::optional<double> stddev;
  double success_rate = 0.0;
  double feasibility_rate = 0.0;
  std::optional<double> mean_te;  // over successful runs only
};

RunStats aggregate(const Problem& problem, const SuccessCriterion& criterion,
                   std::span<const RunResult> runs);

/// Mean reported incumbent objective across runs at each cycle.
std::vector<double> mean_trace(const Problem& problem, std::span<const RunResult> runs);

struct ExperimentResult {
  std::string problem;
  std::string rule;
  std::string formulation;
  std::size_t agents = 0;
  std::size_t cycles = 0;
  std::optional<double> known_best;
  RunStats stats;
  std::vector<RunResult> runs;  // in run-index order
};

/// Execute `config.runs` independently seeded runs (concurrently when
/// threads allow) and aggregate them in run-index order.
ExperimentResult run_experiment(const Problem& problem, const ExperimentConfig& config);

std::string to_string(Formulation f);

}  // namespace swaf
