#pragma once

#include <string_view>

#include "mahlerzero/poly.hpp"

namespace mahlerzero {

/// Variables an expression may mention.
enum class Vars : unsigned { z = 1, y = 2, zy = 3 };

/// Recursive-descent parser for
///
///   expr     := ['+'|'-'] term (('+' | '-') term)* ;
///   term     := factor ('*' factor)* ;
///   factor   := base ('^' nat)? ;
///   base     := rational | 'z' | 'y' | '(' expr ')' ;
///   rational := '-'? nat ('/' nat)? ;
///
/// Whitespace is insignificant and there is no implicit multiplication.
/// Throws ParseError (with the byte offset) on malformed input or on a
/// variable outside `vars`.
BiPoly parse_poly(std::string_view text, Vars vars = Vars::zy);

/// parse_poly restricted to z.
Poly parse_univariate(std::string_view text);

}  // namespace mahlerzero
