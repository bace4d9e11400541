#include "swaf/engine.hpp"

#include <string>

#include "swaf/errors.hpp"

namespace swaf {

void SwarmConfig::validate() const {
  if (n_agents < 2) {
    throw ConfigError("swarm needs at least 2 agents");
  }
  try {
    if (formulation == Formulation::acr) {
      acr_params().validate(max_cycles);
    }
    if (const auto* rc = std::get_if<RandomCombination>(&rule)) {
      if (rc->rules.empty() || rc->rules.size() != rc->weights.size()) {
        throw ConfigError("random combination needs one weight per rule");
      }
    }
    if (const auto* nn = std::get_if<AdaptiveDeployment>(&rule)) {
      nn->params.validate();
      if (nn->rules.size() != nn->params.n_outputs) {
        throw ConfigError("deployer output count must equal the number of rules");
      }
    }
  } catch (const ArgumentError& err) {
    throw ConfigError(err.what());
  }
}

std::size_t best_index(std::span<const KnowledgePoint> points, const Comparator& cmp) {
  if (points.empty()) {
    throw StateError("best_of: empty set");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (cmp.strictly_better(points[i].goodness, points[best].goodness)) {
      best = i;
    }
  }
  return best;
}

Swarm::Swarm(Problem problem, SwarmConfig config)
    : problem_(std::move(problem)), config_(std::move(config)), rng_(config_.seed) {
  config_.validate();
  acr_params_ = config_.acr_params();

  const auto bounds = problem_.bounds();
  const auto* nn = std::get_if<AdaptiveDeployment>(&config_.rule);

  agents_.reserve(config_.n_agents);
  board_.published.reserve(config_.n_agents);
  for (std::size_t i = 0; i < config_.n_agents; ++i) {
    Vector x(bounds.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
      x[d] = bounds[d].lower + rng_.uniform_real() * bounds[d].range();
    }
    KnowledgePoint kp{x, goodness(problem_, x)};
    Agent agent{.id = i, .memory = init_ps_memory(kp), .deployer = std::nullopt,
                .active_rule = PsRule{}};
    if (nn) {
      agent.deployer.emplace(nn->params, rng_);
    }
    board_.published.push_back(agent.memory.p);
    agents_.push_back(std::move(agent));
  }
  initial_evals_ = problem_.eval_counter();

  if (config_.formulation == Formulation::acr) {
    std::vector<GoodnessPair> gps;
    gps.reserve(board_.published.size());
    for (const auto& kp : board_.published) gps.push_back(kp.goodness);
    board_.acr = acr_init(gps);
    comparator_ = Comparator(board_.acr->epsilon_r);
  }
  board_.incumbent_index = best_index(board_.published, comparator_);
  record_history();
}

double Swarm::rank_fraction(std::size_t agent) const {
  const auto& mine = board_.published[agent].goodness;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < board_.published.size(); ++j) {
    if (j == agent) continue;
    const auto& other = board_.published[j].goodness;
    if (comparator_.strictly_better(other, mine) ||
        (j < agent && comparator_.better_or_equal(other, mine))) {
      ++rank;
    }
  }
  return static_cast<double>(rank) / static_cast<double>(board_.published.size());
}

RuleId Swarm::select_rule(Agent& agent) {
  return std::visit(
      [&](const auto& spec) -> RuleId {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, FixedRule>) {
          return spec.rule;
        } else if constexpr (std::is_same_v<T, DepsRule>) {
          return deps_select(spec, t_);
        } else if constexpr (std::is_same_v<T, RandomCombination>) {
          return spec.rules[rc_select(std::span<const double>(spec.weights), rng_)];
        } else {
          auto& net = *agent.deployer;
          const double rank = net.interval_elapsed() ? rank_fraction(agent.id) : 0.0;
          return spec.rules[net.deploy_step(rank, rng_)];
        }
      },
      config_.rule);
}

void Swarm::publish(std::size_t i) {
  board_.published[i] = agents_[i].memory.p;
  const std::size_t inc = board_.incumbent_index;
  if (i == inc) {
    return;
  }
  const auto& mine = board_.published[i].goodness;
  const auto& best = board_.published[inc].goodness;
  if (comparator_.strictly_better(mine, best) ||
      (i < inc && comparator_.better_or_equal(mine, best))) {
    board_.incumbent_index = i;
  }
}

void Swarm::step() {
  if (t_ >= config_.max_cycles) {
    throw StateError("swarm: cycle budget exhausted");
  }
  ++t_;
  for (auto& agent : agents_) {
    agent.active_rule = select_rule(agent);
    const KnowledgePoint& g = board_.incumbent();

    if (const auto* ps = std::get_if<PsRule>(&agent.active_rule)) {
      Vector x = ps_generate(agent.memory, g, ps->params, rng_);
      KnowledgePoint candidate{std::move(x), {}};
      candidate.goodness = goodness(problem_, candidate.x);
      test_update(agent.memory, candidate, comparator_);
    } else {
      const auto& de = std::get<DeRule>(agent.active_rule);
      Vector x = de_generate(agent.memory.p, g, board_.published, de.params, rng_);
      KnowledgePoint candidate{std::move(x), {}};
      candidate.goodness = goodness(problem_, candidate.x);
      test_update(agent.memory.p, candidate, comparator_);
    }
    publish(agent.id);
  }

  if (board_.acr) {
    std::vector<GoodnessPair> gps;
    gps.reserve(board_.published.size());
    for (const auto& kp : board_.published) gps.push_back(kp.goodness);
    board_.acr = acr_update(*board_.acr, acr_params_, t_, gps);
    comparator_ = Comparator(board_.acr->epsilon_r);
  }
  board_.incumbent_index = best_index(board_.published, comparator_);
  record_history();
}

void Swarm::record_history() {
  history_.push_back(board_.published[best_index(board_.published, Comparator{})].goodness);
  if (board_.acr) {
    epsilon_history_.push_back(board_.acr->epsilon_r);
  }
}

RunResult Swarm::result() const {
  // Reported solution ranks with the unrelaxed comparator, so a relaxed run
  // still reports its best truly feasible point when one exists.
  const auto& best = best_of(board_.published, Comparator{});
  RunResult r;
  r.solution = pbh_map(best.x, problem_.bounds());
  r.goodness = best.goodness;
  r.objective = problem_.reported(best.goodness.f_obj);
  r.feasible = best.goodness.f_con == 0.0;
  r.evaluations = cycle_evaluations();
  r.initial_evaluations = initial_evals_;
  r.agents = config_.n_agents;
  r.history = history_;
  r.epsilon_history = epsilon_history_;
  return r;
}

RunResult Swarm::run_to_end() {
  while (t_ < config_.max_cycles) {
    step();
  }
  return result();
}

RunResult run(const Problem& problem, const SwarmConfig& config) {
  Problem own = problem;
  own.reset_counter();
  return Swarm(std::move(own), config).run_to_end();
}

}  // namespace swaf
