#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swaf/types.hpp"

namespace swaf {

/// Scalar function of a point; used for objectives and constraints.
using ScalarField = std::function<double(std::span<const double>)>;

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;

  double range() const { return upper - lower; }
};

enum class Sense { minimize, maximize };

struct SuccessCriterion {
  enum class Mode { relative_gap, absolute_gap };

  Mode mode = Mode::relative_gap;
  double tolerance = 0.02;
  bool require_feasible = false;
  // Used in place of the relative gap when the known optimum is exactly 0.
  double absolute_fallback = 1e-3;
};

struct RawEvaluation {
  double objective = 0.0;            // minimization sign
  std::vector<double> constraints;   // g_j(x), satisfied when <= 0
};

/// Wrap an equality h(x) = 0 as the inequality |h(x)| - eps_h <= 0.
/// Throws ArgumentError when eps_h <= 0.
ScalarField convert_equality(ScalarField h, double eps_h);

/// An optimization problem: box, objective, inequality constraints.
///
/// Maximization problems are stored negated, so `evaluate_raw` always returns
/// a value to be minimized; `reported` flips it back for output. `known_best`
/// is kept in the reported (literature) sign.
///
/// Each instance counts its own raw evaluations. Copies carry an independent
/// counter, so one copy per concurrent run is the intended use.
class Problem {
 public:
  struct Definition {
    std::string name;
    std::vector<Bounds> bounds;
    ScalarField objective;
    std::vector<ScalarField> constraints;
    Sense sense = Sense::minimize;
    std::optional<double> known_best;
    std::optional<Vector> known_optimizer;
    std::optional<SuccessCriterion> success;  // defaults derived when absent
  };

  explicit Problem(Definition def);

  const std::string& name() const { return def_.name; }
  std::size_t dimension() const { return def_.bounds.size(); }
  std::span<const Bounds> bounds() const { return def_.bounds; }
  std::size_t constraint_count() const { return def_.constraints.size(); }
  bool constrained() const { return !def_.constraints.empty(); }
  Sense sense() const { return def_.sense; }
  const std::optional<double>& known_best() const { return def_.known_best; }
  const std::optional<Vector>& known_optimizer() const { return def_.known_optimizer; }
  const SuccessCriterion& success() const { return success_; }

  /// Objective (minimization sign) and every constraint value at `x`.
  /// `x` may lie outside the box. Increments the evaluation counter.
  /// Throws ArgumentError on dimension mismatch, EvaluationError on a
  /// non-finite result.
  RawEvaluation evaluate_raw(std::span<const double> x);

  /// Convert an internal (minimization-sign) objective to the reported sign.
  double reported(double internal_objective) const {
    return def_.sense == Sense::maximize ? -internal_objective : internal_objective;
  }

  /// Copy with a different known optimum and/or success criterion.
  /// The copy starts with a zero evaluation counter.
  Problem with_targets(std::optional<double> known_best,
                       std::optional<SuccessCriterion> success) const;

  std::uint64_t eval_counter() const { return eval_counter_; }
  void reset_counter() { eval_counter_ = 0; }

 private:
  Definition def_;
  SuccessCriterion success_;
  std::uint64_t eval_counter_ = 0;
};

}  // namespace swaf
