#pragma once

#include <string>
#include <variant>

#include "mst/blaschke.hpp"

namespace mst {

/// Shorthand grammar:
///   z^n                  Blaschke product with n zeros at the origin
///   blaschke(a, b, ...)  Blaschke product with the listed zeros
///   expression           rational function built from complex literals (2, 0.5i, 1-2i),
///                        z, + - * / ^integer and parentheses; juxtaposition multiplies,
///                        so "(1 + 0.8333z)/(1 - 0.5z)" and "2z^-1 + 3" both parse.
std::variant<BlaschkeProduct, RationalFn> parse_shorthand(const std::string& s);

/// Rational function from an expression; "z^n" means the monomial here.
RationalFn parse_rational_expression(const std::string& s);

/// Blaschke product from "z^n" or "blaschke(...)".
BlaschkeProduct parse_blaschke_shorthand(const std::string& s);

}  // namespace mst
