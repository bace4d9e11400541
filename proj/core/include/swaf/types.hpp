#pragma once

#include <vector>

namespace swaf {

/// A point in R^D, in problem coordinates.
using Vector = std::vector<double>;

/// Goodness of a knowledge point: objective value and aggregate constraint
/// violation. Smaller is better on both; comparison is lexicographic with
/// violation first (see formulation.hpp).
struct GoodnessPair {
  double f_obj = 0.0;
  double f_con = 0.0;  // >= 0, zero iff feasible

  friend bool operator==(const GoodnessPair&, const GoodnessPair&) = default;
};

/// A candidate vector together with the goodness of its boundary-mapped image.
/// `x` is kept as generated (possibly outside the box).
struct KnowledgePoint {
  Vector x;
  GoodnessPair goodness;
};

}  // namespace swaf
