#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mahlerzero/poly.hpp"
#include "mahlerzero/rational.hpp"

namespace mahlerzero {

/// Order of vanishing at z = 0 as far as a truncated series can tell:
/// either the exact index of the first nonzero coefficient, or "no nonzero
/// coefficient up to T" (which is how the zero series looks at every order).
class Valuation {
 public:
  static Valuation finite(std::size_t v) { return Valuation(true, v); }
  static Valuation above(std::size_t trunc_order) { return Valuation(false, trunc_order); }

  bool is_finite() const noexcept { return finite_; }
  /// The valuation when finite, otherwise the truncation order.
  std::size_t value() const noexcept { return value_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation(bool finite, std::size_t value) : finite_(finite), value_(value) {}

  bool finite_;
  std::size_t value_;
};

/// Power series over Q known exactly on the coefficients of z^0 .. z^T.
class Series {
 public:
  /// The zero series known to order 0.
  Series() : coeffs_(1) {}
  /// The zero series known to order T.
  explicit Series(std::size_t trunc_order) : coeffs_(trunc_order + 1) {}
  /// Pads with zeros (or drops the tail) so that exactly T+1 coefficients remain.
  Series(std::vector<Rational> coeffs, std::size_t trunc_order);

  /// A polynomial read as an exact series, cut at order T.
  static Series from_poly(const Poly& p, std::size_t trunc_order);

  std::size_t trunc_order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Same series forgetting every coefficient above t (t <= T).
  Series truncated(std::size_t t) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Valuation valuation(const Series& s);

enum class SeriesOp { add, sub, mul };

/// Truncation follows the pessimistic min rule: the result is known to
/// min(T_a, T_b) for every op.
Series combine(const Series& a, const Series& b, SeriesOp op);

inline Series operator+(const Series& a, const Series& b) { return combine(a, b, SeriesOp::add); }
inline Series operator-(const Series& a, const Series& b) { return combine(a, b, SeriesOp::sub); }
inline Series operator*(const Series& a, const Series& b) { return combine(a, b, SeriesOp::mul); }
Series operator-(const Series& s);
Series operator*(const Rational& c, const Series& s);

/// s(z^m); known to order m(T+1) - 1.
Series substitute_power(const Series& s, std::size_t m);

/// p(z) * s(z), keeping the truncation order of s.
Series scale_by_poly(const Series& s, const Poly& p);

/// 1/s; requires s[0] != 0.
Series inverse(const Series& s);

/// a/b; requires b[0] != 0.
Series divide(const Series& a, const Series& b);

}  // namespace mahlerzero
