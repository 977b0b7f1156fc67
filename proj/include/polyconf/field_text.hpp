#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "polyconf/vector_field.hpp"

namespace polyconf {

// Field grammar (whitespace between tokens is ignored, '*' between factors
// is optional, indices are 1-based):
//
//   field  := term { ("+" | "-") term }
//   term   := [ coeff ] { factor } "d" INT
//   factor := "x" INT [ "^" INT ]
//   coeff  := INT [ "/" INT ]
//
// A leading "-" folds into the coefficient; the literal "0" is the zero
// field. Components that no term mentions are zero. Throws ParseError.
VectorField parse_field(std::string_view text, std::size_t dimension);

// Same grammar without the trailing "d" INT.
Polynomial parse_polynomial(std::string_view text, std::size_t dimension);

std::string print_field(const VectorField& x);

}  // namespace polyconf
