#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsing/groebner.hpp"
#include "fsing/poly.hpp"

namespace fsing {

// Grammar, loosest binding first:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*     division by constants only
//   unary  := '-' unary | power
//   power  := atom ('^' digits)?
//   atom   := digits | name | '(' expr ')'
// Names must come from the ring's variable list.  Throws ParseError.
QPoly parse_poly(std::string_view text, const QRingPtr& ring);
Poly parse_poly(std::string_view text, const FpRingPtr& ring);

// Convenience: a fresh Q ring on the given names.
QPoly parse_poly(std::string_view text, const std::vector<std::string>& names);

// Variable names appearing in text, in order of first appearance.
std::vector<std::string> scan_variables(std::string_view text);

// "x^2, x*y, y^3": comma-separated monomials with coefficient 1.
MonomialIdeal parse_monomial_gens(std::string_view text, const std::vector<std::string>& names);

}  // namespace fsing
