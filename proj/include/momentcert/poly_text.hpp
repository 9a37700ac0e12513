#pragma once

#include <string>
#include <string_view>

#include "momentcert/cpoly.hpp"

namespace momentcert {

// Canonical text form: sum of terms "c * x1^a1 x2^a2", leading term first
// (descending graded-lex). Real coefficients print bare with the sign folded
// into the separator; coefficients with nonzero imaginary part print as
// "(re+imi)". Numbers use shortest round-trip formatting, so
// parse_poly(to_text(p)) == p exactly.
std::string to_text(const CPoly& p);

// Accepts the printed form plus common variants: bare monomials ("x1^2"),
// unparenthesized complex coefficients ("1+2i", bound greedily), "i"/"2i"
// imaginary literals, and '*' or whitespace between monomial factors.
// n_hint, when >= 0, fixes the ambient dimension (error if a variable
// exceeds it); otherwise the dimension is the largest variable index seen.
CPoly parse_poly(std::string_view text, int n_hint = -1);

std::string format_double(double v);

}  // namespace momentcert
