#pragma once

#include <filesystem>
#include <string_view>

#include "swaf/problem.hpp"

namespace swaf {

/// Parse a problem description written as `key = value` lines.
///
///   # comment
///   name       = ring
///   dimension  = 2
///   bounds     = -5:5                 # one range for all dims, or a comma list
///   objective  = (x1 - 1)^2 + x2^2
///   constraint = x1 + x2 - 1          # g(x) <= 0, repeatable
///   equality   = x1 - x2^2            # h(x) = 0, repeatable
///   epsilon_h  = 1e-4                 # tolerance for equalities
///   sense      = minimize             # or maximize
///   known_best = 0
///   optimizer  = 1, 0                 # optional reference point
///   success    = relative:0.02        # or absolute:<tol>
///
/// `builtin = G7` starts from a catalog problem instead; only `known_best`
/// and `success` may then be overridden. Throws ConfigError with the line
/// number on malformed input.
Problem parse_problem_config(std::string_view text);

/// Read and parse a problem file. Throws IoError if the file cannot be read.
Problem load_problem_file(const std::filesystem::path& path);

}  // namespace swaf
