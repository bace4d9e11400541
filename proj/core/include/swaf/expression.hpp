#pragma once

#include <cstddef>
#include <string_view>

#include "swaf/problem.hpp"

namespace swaf {

/// Compile an arithmetic expression over x1..xD into a callable.
///
/// Grammar: numbers, variables `x1`..`xD` (1-based), constants `pi` and `e`,
/// binary `+ - * / ^` (`^` is right-associative and binds tighter than unary
/// minus), parentheses, and the functions sin, cos, tan, asin, acos, atan,
/// exp, log, sqrt, abs (one argument) and pow, min, max (two arguments).
///
/// Throws ConfigError with the offending column on malformed input or a
/// variable index outside [1, dimension].
ScalarField compile_expression(std::string_view source, std::size_t dimension);

}  // namespace swaf
