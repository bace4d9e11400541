#include "swaf/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "swaf/errors.hpp"
#include "swaf/rng.hpp"

namespace swaf {

std::string to_string(Formulation f) { return f == Formulation::acr ? "acr" : "bch"; }

namespace {

bool meets(const GoodnessPair& gp, const Problem& problem, const SuccessCriterion& c) {
  if (c.require_feasible && gp.f_con != 0.0) {
    return false;
  }
  const double target = problem.known_best().value_or(0.0);
  const double gap = std::abs(problem.reported(gp.f_obj) - target);
  if (c.mode == SuccessCriterion::Mode::absolute_gap) {
    return gap <= c.tolerance;
  }
  if (target == 0.0) {
    return gap <= c.absolute_fallback;
  }
  return gap <= c.tolerance * std::abs(target);
}

}  // namespace

SuccessOutcome success_check(const RunResult& run, const Problem& problem,
                             const SuccessCriterion& criterion) {
  if (criterion.mode == SuccessCriterion::Mode::relative_gap && !problem.known_best()) {
    throw ConfigError("problem '" + problem.name() + "' has no known optimum for a relative gap");
  }
  SuccessOutcome out;
  out.success = meets(run.goodness, problem, criterion);
  if (!out.success) {
    return out;
  }
  for (std::size_t t = 0; t < run.history.size(); ++t) {
    if (meets(run.history[t], problem, criterion)) {
      out.te = static_cast<std::uint64_t>(run.agents) * t;
      return out;
    }
  }
  out.te = run.evaluations;
  return out;
}

RunStats aggregate(const Problem& problem, const SuccessCriterion& criterion,
                   std::span<const RunResult> runs) {
  RunStats s;
  s.runs = runs.size();
  std::vector<double> feasible;
  double te_sum = 0.0;
  for (const auto& r : runs) {
    if (r.feasible) {
      feasible.push_back(r.goodness.f_obj);
    }
    const auto outcome = success_check(r, problem, criterion);
    if (outcome.success) {
      ++s.successes;
      te_sum += static_cast<double>(*outcome.te);
    }
  }
  s.feasible_runs = feasible.size();
  if (s.runs > 0) {
    s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.runs);
    s.feasibility_rate = static_cast<double>(s.feasible_runs) / static_cast<double>(s.runs);
  }
  if (s.successes > 0) {
    s.mean_te = te_sum / static_cast<double>(s.successes);
  }
  if (!feasible.empty()) {
    // Statistics on the minimization-sign values, converted at the end.
    const auto n = static_cast<double>(feasible.size());
    double sum = 0.0;
    for (double v : feasible) sum += v;
    const double mean = sum / n;
    double sq = 0.0;
    for (double v : feasible) sq += (v - mean) * (v - mean);
    const auto [lo, hi] = std::minmax_element(feasible.begin(), feasible.end());
    s.mean = problem.reported(mean);
    s.best = problem.reported(*lo);
    s.worst = problem.reported(*hi);
    s.stddev = feasible.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
  }
  return s;
}

std::vector<double> mean_trace(const Problem& problem, std::span<const RunResult> runs) {
  std::size_t length = 0;
  for (const auto& r : runs) length = std::max(length, r.history.size());
  std::vector<double> sums(length, 0.0);
  std::vector<std::size_t> counts(length, 0);
  for (const auto& r : runs) {
    for (std::size_t t = 0; t < r.history.size(); ++t) {
      sums[t] += r.history[t].f_obj;
      ++counts[t];
    }
  }
  for (std::size_t t = 0; t < length; ++t) {
    sums[t] = problem.reported(sums[t] / static_cast<double>(counts[t]));
  }
  return sums;
}

ExperimentResult run_experiment(const Problem& problem, const ExperimentConfig& config) {
  if (config.runs == 0) {
    throw ConfigError("experiment needs at least one run");
  }
  config.swarm.validate();
  const SuccessCriterion criterion = config.success.value_or(problem.success());
  if (criterion.mode == SuccessCriterion::Mode::relative_gap && !problem.known_best()) {
    throw ConfigError("problem '" + problem.name() + "' has no known optimum for a relative gap");
  }

  std::vector<RunResult> results(config.runs);
  std::vector<std::exception_ptr> errors(config.runs);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t r = next++; r < config.runs; r = next++) {
      try {
        SwarmConfig swarm = config.swarm;
        swarm.seed = derive_seed(config.master_seed, r);
        results[r] = run(problem, swarm);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };

  std::size_t threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, config.runs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  ExperimentResult out;
  out.problem = problem.name();
  out.rule = to_string(config.swarm.rule);
  out.formulation = to_string(config.swarm.formulation);
  out.agents = config.swarm.n_agents;
  out.cycles = config.swarm.max_cycles;
  out.known_best = problem.known_best();
  out.stats = aggregate(problem, criterion, results);
  out.runs = std::move(results);
  return out;
}

}  // namespace swaf
