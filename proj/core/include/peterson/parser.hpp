#pragma once

#include <string_view>

#include "peterson/polynomial.hpp"

namespace peterson {

/// Parses the CLI polynomial syntax, e.g. "3/2*xi_1^2*t - xi_2".
/// Factors are joined by '*', exponents by '^'; coefficients are integers
/// or fractions. Unknown variables are rejected with their position.
Polynomial parse_polynomial(std::string_view text, VariableSetPtr vars, MonomialOrder order);

}  // namespace peterson
