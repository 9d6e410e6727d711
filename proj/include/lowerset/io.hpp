#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lowerset/lower_set.hpp"

namespace lowerset {

/// Compact JSON array of coordinate arrays in lex order, e.g. [[0,0],[0,1],[1,0]].
std::string to_json_line(const LowerSet& q);

/// Parses one line of the format above; `dim` is required to read the empty set.
/// Throws std::invalid_argument on malformed input or a set that is not lower.
LowerSet parse_lower_set(std::string_view line, std::size_t dim);

}  // namespace lowerset
