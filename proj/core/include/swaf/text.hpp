#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace swaf {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/// Whole-string parse; nullopt on trailing garbage or overflow.
std::optional<double> parse_double(std::string_view text);

}  // namespace swaf
