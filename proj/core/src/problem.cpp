#include "swaf/problem.hpp"

#include <cmath>
#include <sstream>

#include "swaf/errors.hpp"

namespace swaf {

ScalarField convert_equality(ScalarField h, double eps_h) {
  if (!(eps_h > 0.0)) {
    throw ArgumentError("convert_equality: eps_h must be positive");
  }
  return [h = std::move(h), eps_h](std::span<const double> x) {
    return std::abs(h(x)) - eps_h;
  };
}

Problem::Problem(Definition def) : def_(std::move(def)) {
  if (def_.bounds.empty()) {
    throw ArgumentError("problem '" + def_.name + "': dimension must be positive");
  }
  for (std::size_t d = 0; d < def_.bounds.size(); ++d) {
    const auto& b = def_.bounds[d];
    if (!(std::isfinite(b.lower) && std::isfinite(b.upper) && b.lower < b.upper)) {
      std::ostringstream msg;
      msg << "problem '" << def_.name << "': invalid bounds in dimension " << d + 1;
      throw ArgumentError(msg.str());
    }
  }
  if (!def_.objective) {
    throw ArgumentError("problem '" + def_.name + "': missing objective");
  }
  if (def_.known_optimizer && def_.known_optimizer->size() != def_.bounds.size()) {
    throw ArgumentError("problem '" + def_.name + "': optimizer has wrong dimension");
  }
  if (def_.success) {
    success_ = *def_.success;
    if (!(success_.tolerance > 0.0)) {
      throw ArgumentError("problem '" + def_.name + "': success tolerance must be positive");
    }
  } else {
    success_.require_feasible = constrained();
  }
}

Problem Problem::with_targets(std::optional<double> known_best,
                              std::optional<SuccessCriterion> success) const {
  Definition def = def_;
  if (known_best) {
    def.known_best = known_best;
  }
  def.success = success ? *success : success_;
  return Problem(std::move(def));
}

RawEvaluation Problem::evaluate_raw(std::span<const double> x) {
  if (x.size() != dimension()) {
    std::ostringstream msg;
    msg << "problem '" << def_.name << "': expected " << dimension() << " coordinates, got "
        << x.size();
    throw ArgumentError(msg.str());
  }
  ++eval_counter_;

  RawEvaluation out;
  const double f = def_.objective(x);
  out.objective = def_.sense == Sense::maximize ? -f : f;
  out.constraints.reserve(def_.constraints.size());
  for (const auto& g : def_.constraints) {
    out.constraints.push_back(g(x));
  }

  bool finite = std::isfinite(out.objective);
  for (double g : out.constraints) {
    finite = finite && std::isfinite(g);
  }
  if (!finite) {
    std::ostringstream msg;
    msg << "problem '" << def_.name << "': non-finite evaluation at (";
    for (std::size_t d = 0; d < x.size(); ++d) {
      msg << (d ? ", " : "") << x[d];
    }
    msg << ")";
    throw EvaluationError(msg.str(), Vector(x.begin(), x.end()));
  }
  return out;
}

}  // namespace swaf
