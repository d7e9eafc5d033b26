#pragma once

#include "pbv/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pbv {

/// Parse a polynomial expression over the named generators. Grammar:
/// integers, rationals "p/q", generator names, + - * ^ and parentheses;
/// whitespace is insignificant. `line`/`column` give the position of the
/// first character of `text` inside the enclosing document, so parse
/// errors carry document coordinates.
Poly parse_poly(std::string_view text, const std::vector<std::string>& gen_names,
                std::size_t line = 1, std::size_t column = 1);

} // namespace pbv
