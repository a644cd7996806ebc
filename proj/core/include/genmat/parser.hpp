#pragma once

#include <optional>
#include <string_view>

#include "genmat/trace_poly.hpp"

namespace genmat {

// Recursive-descent parser for the expression grammar:
//   expr   := term (("+"|"-") term)*
//   term   := signed factor ("*" factor)*
//   factor := atom ("^" nat)?
//   atom   := rational | "X" nat | "tr" "(" expr ")" | "det" "(" expr ")"
//           | "[" expr "," expr "]" | "(" expr ")"
// Whitespace insensitive; explicit "*" required; "[a,b]" is the commutator.
// det(e), and tr of a term with a constant part, need the matrix size n.
TracePolynomial parse_expression(std::string_view text, int m,
                                 std::optional<int> n = std::nullopt);

}  // namespace genmat
