#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swaf/deployer.hpp"
#include "swaf/rules.hpp"

namespace swaf {

struct FixedRule {
  RuleId rule;
};

/// Each cycle, every agent draws its rule with probability proportional to
/// the weight.
struct RandomCombination {
  std::vector<RuleId> rules;
  std::vector<double> weights;
};

/// Every agent owns a deployer network whose outputs map onto `rules`.
struct AdaptiveDeployment {
  std::vector<RuleId> rules;
  DeployerParams params;  // params.n_outputs == rules.size()
};

/// How agents choose their generate-and-test rule each cycle.
using RuleSpec = std::variant<FixedRule, DepsRule, RandomCombination, AdaptiveDeployment>;

/// Parse a rule specification:
///
///   ps | ps:C1=..:C2=..            fixed particle-swarm rule
///   de:CR=0.9[:SF=..][:NV=..]      fixed differential-evolution rule
///   deps:CR=0.1[:SF=..:NV=..:C1=..:C2=..]
///   rc:[ps,de:CR=0.9@2]            random combination, optional @weight
///   nn:[de:CR=0.0,de:CR=0.5]       adaptive deployment over the listed rules
///
/// `rc:cr-sweep` and `nn:cr-sweep` expand to eleven DE rules with
/// CR = 0.0, 0.1, ..., 1.0. For `nn`, layer sizes and timing come from
/// `nn_defaults`; the output count is set from the list length.
/// Throws ConfigError on malformed input.
RuleSpec parse_rule_spec(std::string_view text, const DeployerParams& nn_defaults = {});

std::string to_string(const RuleSpec& spec);

/// The eleven DE rules CR = 0.0 .. 1.0 in steps of 0.1.
std::vector<RuleId> cr_sweep_rules();

}  // namespace swaf
