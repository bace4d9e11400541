// swaf: run swarm experiments on the built-in catalog or user problem files.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swaf/catalog.hpp"
#include "swaf/errors.hpp"
#include "swaf/experiment.hpp"
#include "swaf/problem_file.hpp"
#include "swaf/report.hpp"
#include "swaf/rule_spec.hpp"
#include "swaf/text.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfig = 2,
  kEvaluation = 3,
  kIo = 4,
};

constexpr const char* kOutputDirEnv = "SWAF_OUTPUT_DIR";

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

struct RunOptions {
  std::vector<std::string> problems;
  std::vector<std::string> problem_files;
  std::string rule = "deps:CR=0.9";
  std::size_t agents = 70;
  std::size_t cycles = 2000;
  std::size_t runs = 100;
  std::uint64_t seed = 42;
  std::string formulation = "bch";
  std::string out;
  std::string trace;
  std::string summary;
  std::size_t threads = 0;
  swaf::DeployerParams nn;
  std::optional<std::size_t> acr_tth;
};

int run_command(const RunOptions& opt) {
  std::vector<swaf::Problem> problems;
  for (const auto& id : opt.problems) {
    problems.push_back(swaf::make_catalog_problem(id));
  }
  for (const auto& file : opt.problem_files) {
    problems.push_back(swaf::load_problem_file(file));
  }
  if (problems.empty()) {
    throw swaf::ConfigError("no problem given (use --problem or --problem-file)");
  }

  swaf::ExperimentConfig exp;
  exp.runs = opt.runs;
  exp.master_seed = opt.seed;
  exp.threads = opt.threads;
  exp.swarm.n_agents = opt.agents;
  exp.swarm.max_cycles = opt.cycles;
  exp.swarm.rule = swaf::parse_rule_spec(opt.rule, opt.nn);
  exp.swarm.formulation =
      opt.formulation == "acr" ? swaf::Formulation::acr : swaf::Formulation::bch;
  if (opt.acr_tth) {
    auto params = swaf::AcrParams::defaults_for(opt.cycles);
    params.t_th = *opt.acr_tth;
    exp.swarm.acr = params;
  }

  std::vector<swaf::ResultRow> rows;
  std::vector<swaf::TraceColumn> traces;
  for (const auto& problem : problems) {
    const auto result = swaf::run_experiment(problem, exp);
    rows.push_back(swaf::to_row(result));
    if (!opt.trace.empty()) {
      traces.push_back({result.problem + "/" + result.rule + "/" + result.formulation,
                        swaf::mean_trace(problem, result.runs)});
    }
  }

  swaf::write_summary(std::cout, rows);
  if (!opt.out.empty()) {
    swaf::write_file(resolve_output(opt.out),
                     [&](std::ostream& os) { swaf::write_results_csv(os, rows); });
  }
  if (!opt.summary.empty()) {
    swaf::write_file(resolve_output(opt.summary),
                     [&](std::ostream& os) { swaf::write_summary(os, rows); });
  }
  if (!opt.trace.empty()) {
    swaf::write_file(resolve_output(opt.trace),
                     [&](std::ostream& os) { swaf::write_trace_csv(os, traces); });
  }
  return kOk;
}

int list_command() {
  for (const auto& p : swaf::benchmark_catalog()) {
    std::cout << p.name() << "\tD=" << p.dimension() << "\tconstraints=" << p.constraint_count()
              << '\t' << (p.sense() == swaf::Sense::maximize ? "max" : "min") << "\tF*="
              << (p.known_best() ? swaf::format_double(*p.known_best()) : "-") << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Swarm algorithm framework: benchmark runner"};
  app.require_subcommand(1);

  RunOptions opt;
  // Options for `run` live under a [run] section of the file.
  app.set_config("--config", "", "Read options from an INI/TOML file; command line wins");
  auto* run = app.add_subcommand("run", "Run repeated experiments and report statistics");
  run->fallthrough();
  run->add_option("--problem", opt.problems, "Built-in problem IDs (GP, BR, H3, SH, G1..G11)")
      ->delimiter(',');
  run->add_option("--problem-file", opt.problem_files, "Problem definition files")
      ->check(CLI::ExistingFile);
  run->add_option("--rule", opt.rule, "Rule spec: ps | de:CR=.. | deps:CR=.. | rc:[..] | nn:[..]")
      ->capture_default_str();
  run->add_option("--agents", opt.agents, "Number of agents N")->capture_default_str();
  run->add_option("--cycles", opt.cycles, "Learning cycles T")->capture_default_str();
  run->add_option("--runs", opt.runs, "Independent runs")->capture_default_str();
  run->add_option("--seed", opt.seed, "Master seed")->capture_default_str();
  run->add_option("--formulation", opt.formulation, "Constraint handling")
      ->check(CLI::IsMember({"bch", "acr"}))
      ->capture_default_str();
  run->add_option("--out", opt.out, "Results CSV path");
  run->add_option("--trace", opt.trace, "Per-cycle mean incumbent trace CSV path");
  run->add_option("--summary", opt.summary, "Text summary path (also printed to stdout)");
  run->add_option("--threads", opt.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  run->add_option("--nn-inputs", opt.nn.n_inputs, "Deployer input neurons")->capture_default_str();
  run->add_option("--nn-hidden", opt.nn.n_hidden, "Deployer middle-layer neurons")
      ->capture_default_str();
  run->add_option("--nn-interval", opt.nn.interval, "Cycles between redeployments")
      ->capture_default_str();
  run->add_option("--nn-worse-ratio", opt.nn.worse_ratio, "Fraction of agents punished")
      ->capture_default_str();
  run->add_option("--acr-tth", opt.acr_tth, "Cycle from which relaxing is forced (default T/2)");
  run->footer(std::string("Relative output paths are placed under $") + kOutputDirEnv +
              " when it is set.");

  app.add_subcommand("list", "List built-in problems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (run->parsed()) {
      return run_command(opt);
    }
    return list_command();
  } catch (const swaf::ConfigError& e) {
    std::cerr << "swaf: configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const swaf::ArgumentError& e) {
    std::cerr << "swaf: configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const swaf::EvaluationError& e) {
    std::cerr << "swaf: evaluation error: " << e.what() << '\n';
    return kEvaluation;
  } catch (const swaf::IoError& e) {
    std::cerr << "swaf: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "swaf: " << e.what() << '\n';
    return kFailure;
  }
}
