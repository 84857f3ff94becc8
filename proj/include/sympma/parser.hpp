#pragma once

// Expression grammar for equations and Lax fields:
//     expr   := expr ('+' | '-') expr | expr '*' expr | '-' expr
//             | expr '^' integer | '(' expr ')' | number | name
//     number := integer | integer '/' integer
//     name   := uIJ (indices sorted, so u21 is u12) | uIJK | lam | dI | HESS
// '^' binds tightest and is right associative. HESS is the determinant of
// the symbolic Hessian of the ring's dimension.

#include "sympma/grassmann.hpp"

#include <string_view>

namespace sma {

/// Parses over `ring`; names must be variables of the ring. `hess_n` is the
/// size of the Hessian HESS expands to (0 disables HESS). Throws
/// Error(SyntaxError) with the column of the offending token.
Polynomial parse_polynomial(std::string_view text, const Vars& ring, int hess_n = 0);

/// Parses over the chart of dimension n and decomposes; NotInSpan lists the
/// monomials left over after subtracting the best basis match.
MAEquation parse_equation(std::string_view text, int n);

}  // namespace sma
