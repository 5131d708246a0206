#pragma once

#include <string>
#include <vector>

#include "hankelforge/rational_function.hpp"

namespace hankelforge {

// Coefficient lists are comma-separated exact rationals in ascending degree:
// "-1,3,0,-2" means -1 + 3x - 2x^3. Rational functions add an optional
// denominator after a semicolon: "1;1,-1" means 1/(1-x). Errors carry the
// character position of the offending token (ParseError).

std::vector<Rat> parse_rat_list(const std::string& spec);
Polynomial parse_polynomial(const std::string& spec);
RationalFunction parse_rational_function(const std::string& spec);

}  // namespace hankelforge
