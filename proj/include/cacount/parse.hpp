#pragma once

#include <string_view>

#include "cacount/modpoly.hpp"

namespace cacount {

// Parses a polynomial expression over the given variables, reducing integer
// coefficients mod p. Grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer | var | var '^' sint | '(' expr ')'
//   sint   := '-'? integer
//
// Multiplication is always explicit ("2*x", never "2x"); whitespace is
// ignored. Negative exponents are kept as written. Throws ParseError with the
// byte offset of the offending token.
ModPoly parse_poly(std::string_view text, const VarList& vars, PrimeModulus p);

// Splits "x,y,z" (whitespace tolerated) into a variable list; names must be
// identifiers and pairwise distinct.
VarList parse_var_list(std::string_view text);

}  // namespace cacount
