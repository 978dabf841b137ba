#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mahlerzero/rational.hpp"

namespace mahlerzero {

/// Degree of the zero polynomial.
inline constexpr long kNegInfinity = std::numeric_limits<long>::min();

/// Dense univariate polynomial in z over Q; coefficient i multiplies z^i.
/// The top stored coefficient is always nonzero (zero is the empty vector).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, std::size_t exponent);
  /// The indeterminate z.
  static Poly z();

  long degree() const {
    return coeffs_.empty() ? kNegInfinity : static_cast<long>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of z^i; zero past the degree.
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  /// Index of the lowest nonzero coefficient. Requires a nonzero polynomial.
  std::size_t order() const;

  Rational operator()(const Rational& z) const;

  /// p(z^m).
  Poly compose_power(std::size_t m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

Poly pow(const Poly& base, std::size_t exponent);

/// Quotient a / b when b divides a exactly; a nonzero remainder is an
/// InternalError.
Poly divexact(const Poly& a, const Poly& b);

inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// Descending powers, e.g. "3/2*z^2 - z + 1".
std::string to_string(const Poly& p, char var = 'z');

/// Degrees (in y, in z) of a bivariate polynomial.
struct DegreeProfile {
  std::size_t delta_y = 0;
  std::size_t delta_z = 0;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Polynomial in an outer variable y with coefficients in Q[z]:
/// sum_j y_coeffs[j](z) * y^j. Also used for Q[z][x] (the resultant
/// variable x takes the outer slot).
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(const Poly& constant);
  explicit BiPoly(std::vector<Poly> y_coeffs);

  /// The indeterminate y.
  static BiPoly y();

  long deg_y() const {
    return y_coeffs_.empty() ? kNegInfinity : static_cast<long>(y_coeffs_.size()) - 1;
  }
  long deg_z() const;
  bool is_zero() const { return y_coeffs_.empty(); }
  std::span<const Poly> y_coeffs() const { return y_coeffs_; }
  const Poly& coeff(std::size_t j) const;
  const Poly& leading() const { return y_coeffs_.back(); }

  /// Exact degrees; requires a nonzero polynomial.
  DegreeProfile profile() const;

  /// Coefficients in y of P(c, y).
  std::vector<Rational> at_z(const Rational& c) const;
  Rational operator()(const Rational& z, const Rational& y) const;

  BiPoly derivative_y() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const Poly& c);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Poly& c) { return a *= c; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void normalize();

  std::vector<Poly> y_coeffs_;
};

BiPoly pow(const BiPoly& base, std::size_t exponent);

/// Exact quotient in Q[z][y]; a nonzero remainder is an InternalError.
BiPoly divexact(const BiPoly& a, const BiPoly& b);

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

/// Canonical printing: descending powers of the outer variable, each
/// coefficient in descending powers of z, rationals as "p/q".
/// Re-parses to the same value when outer_var is 'y'.
std::string to_string(const BiPoly& p, char outer_var = 'y');

}  // namespace mahlerzero
