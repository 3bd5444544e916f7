// Recursive-descent parser for scalar expressions in q.
//
// Grammar (whitespace insignificant):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' exponent)?
//   primary := INTEGER | 'q' | '(' expr ')'
//   exponent:= INTEGER | '-' INTEGER | '(' ['-'] INTEGER ')'
//
// Precedence: '^' > unary minus > '*' '/' > '+' '-'.
#pragma once

#include <string>

#include "qchn/scalar.hpp"

namespace qchn {

// Throws parse_error (with byte position) on syntax errors and on
// non-integer-literal exponents; arithmetic_error on division by zero.
ScalarQ parse_scalar(const std::string& text);

}  // namespace qchn
