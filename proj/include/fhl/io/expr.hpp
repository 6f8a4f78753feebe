#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fhl/exactnum/cyclotomic.hpp"
#include "fhl/multipoly/polynomial.hpp"

namespace fhl::io {

// Expressions over Q(ζ_m):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | 'z' | 'i' | 'x' integer | '(' expr ')'
// z is ζ_m, i is ζ_m^{m/4} (needs 4 | m), x<k> is a variable (polynomials
// only). Division and negative powers need a nonzero constant. Errors are
// ParseError with a "column N" location.
CyclotomicNumber parse_cyclotomic(std::string_view text, int m);
Polynomial parse_polynomial(std::string_view text, int nvars, int m);

// Splits on commas outside parentheses; pieces are trimmed.
std::vector<std::string> split_list(std::string_view text);
std::vector<CyclotomicNumber> parse_cyclotomic_list(std::string_view text, int m);
// Integers only, e.g. "1,3,5".
std::vector<int> parse_int_list(std::string_view text);

}  // namespace fhl::io
