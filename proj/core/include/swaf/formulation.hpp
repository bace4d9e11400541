#pragma once

#include <cstddef>
#include <span>

#include "swaf/problem.hpp"
#include "swaf/types.hpp"

namespace swaf {

/// Periodic boundary mapping. Coordinates outside [l, u] wrap around with
/// period s = u - l; coordinates inside are returned unchanged. The input is
/// not modified.
Vector pbh_map(std::span<const double> x, std::span<const Bounds> bounds);

/// Single-coordinate form of pbh_map.
double pbh_map_coordinate(double x, const Bounds& b);

/// Evaluate a point at its boundary-mapped image: objective plus the sum of
/// positive constraint parts (all weights 1). Exactly one raw evaluation.
GoodnessPair goodness(Problem& problem, std::span<const double> x);

enum class Ordering { a_better_or_equal, b_better };

/// Feasibility-first lexicographic comparison: lower violation wins; on equal
/// violation, lower objective wins; full ties favour `a`.
Ordering bch_compare(const GoodnessPair& a, const GoodnessPair& b);

/// Clamp the violation from below at the relaxation threshold.
GoodnessPair acr_apply(const GoodnessPair& gp, double epsilon_r);

/// The comparator in force during a run: plain feasibility-first when
/// `epsilon_r` is 0, relaxed otherwise.
class Comparator {
 public:
  Comparator() = default;
  explicit Comparator(double epsilon_r) : epsilon_r_(epsilon_r) {}

  double epsilon_r() const { return epsilon_r_; }

  /// a <= b under the active ordering.
  bool better_or_equal(const GoodnessPair& a, const GoodnessPair& b) const {
    return bch_compare(acr_apply(a, epsilon_r_), acr_apply(b, epsilon_r_)) ==
           Ordering::a_better_or_equal;
  }

  bool strictly_better(const GoodnessPair& a, const GoodnessPair& b) const {
    return !better_or_equal(b, a);
  }

 private:
  double epsilon_r_ = 0.0;
};

/// Parameters of the adaptive constraint relaxing controller.
struct AcrParams {
  double r_l = 0.25;
  double r_u = 0.75;
  double beta_l = 0.618;
  double beta_u = 1.382;
  double beta_f = 0.618;
  std::size_t t_th = 0;  // cycle from which the forcing sub-rule may fire

  /// Library defaults with t_th = T / 2.
  static AcrParams defaults_for(std::size_t max_cycles);

  /// Throws ArgumentError when the parameter relations do not hold.
  void validate(std::size_t max_cycles) const;
};

struct AcrState {
  double epsilon_r = 0.0;
  std::size_t n_eps = 0;  // published points with violation > epsilon_r
  double eps_min = 0.0;
  double eps_max = 0.0;
};

/// Initial controller state: threshold set to the largest violation in the
/// published set. Throws StateError on an empty set.
AcrState acr_init(std::span<const GoodnessPair> published);

/// One controller step after learning cycle `t`. Statistics are recomputed from
/// `published`; then forcing (t >= t_th with every point infeasible) shrinks by
/// beta_f, otherwise the infeasible ratio n_eps / |published| is steered into
/// [r_l, r_u]. Throws StateError on an empty set.
AcrState acr_update(const AcrState& state, const AcrParams& params, std::size_t t,
                    std::span<const GoodnessPair> published);

}  // namespace swaf
