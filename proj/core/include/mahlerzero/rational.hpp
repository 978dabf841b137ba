#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mahlerzero {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical form: "p/q" with q > 0 and gcd(|p|, q) = 1; integers print as "p".
std::string to_string(const Rational& r);

/// Accepts "p", "-p" and "p/q" (surrounding whitespace allowed).
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational divexact(const Rational& a, const Rational& b) {
  return Rational(a / b);
}

}  // namespace mahlerzero
