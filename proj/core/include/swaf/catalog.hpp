#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "swaf/problem.hpp"

namespace swaf {

/// Tolerance used to turn the catalog's equality constraints (G3, G5, G11)
/// into inequalities.
inline constexpr double kCatalogEqualityTolerance = 1e-4;

/// The fifteen built-in test problems: GP, BR, H3, SH (unconstrained) and the
/// G1..G11 constrained suite. G2, G3 and G8 are maximization problems.
std::vector<Problem> benchmark_catalog();

/// IDs in catalog order ("GP", "BR", "H3", "SH", "G1", ..., "G11").
std::vector<std::string> catalog_ids();

/// Row order of the published result tables: unconstrained problems first,
/// then inequality-constrained, then equality-constrained.
std::vector<std::string> table_row_order();

/// Build one catalog problem by ID (case-insensitive). Throws ConfigError for
/// an unknown ID.
Problem make_catalog_problem(std::string_view id);

}  // namespace swaf
