#include "mahlerzero/series.hpp"

#include <algorithm>
#include <utility>

#include "mahlerzero/errors.hpp"

namespace mahlerzero {

Series::Series(std::vector<Rational> coeffs, std::size_t trunc_order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(trunc_order + 1);
}

Series Series::from_poly(const Poly& p, std::size_t trunc_order) {
  std::vector<Rational> c(trunc_order + 1);
  const std::size_t n = std::min(p.size(), trunc_order + 1);
  for (std::size_t i = 0; i < n; ++i) c[i] = p.coeff(i);
  return Series(std::move(c), trunc_order);
}

Series Series::truncated(std::size_t t) const {
  if (t > trunc_order()) throw InternalError("cannot extend a truncated series");
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(t) + 1), t);
}

Valuation valuation(const Series& s) {
  const auto c = s.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!is_zero(c[i])) return Valuation::finite(i);
  return Valuation::above(s.trunc_order());
}

Series combine(const Series& a, const Series& b, SeriesOp op) {
  const std::size_t t = std::min(a.trunc_order(), b.trunc_order());
  std::vector<Rational> out(t + 1);
  switch (op) {
    case SeriesOp::add:
      for (std::size_t i = 0; i <= t; ++i) out[i] = a[i] + b[i];
      break;
    case SeriesOp::sub:
      for (std::size_t i = 0; i <= t; ++i) out[i] = a[i] - b[i];
      break;
    case SeriesOp::mul:
      for (std::size_t i = 0; i <= t; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j <= t; ++j) out[i + j] += a[i] * b[j];
      }
      break;
  }
  return Series(std::move(out), t);
}

Series operator-(const Series& s) {
  std::vector<Rational> out(s.coeffs().begin(), s.coeffs().end());
  for (auto& c : out) c = -c;
  return Series(std::move(out), s.trunc_order());
}

Series operator*(const Rational& c, const Series& s) {
  std::vector<Rational> out(s.coeffs().begin(), s.coeffs().end());
  for (auto& x : out) x *= c;
  return Series(std::move(out), s.trunc_order());
}

Series substitute_power(const Series& s, std::size_t m) {
  if (m == 0) throw PreconditionViolated("substitute_power needs m >= 1");
  if (m == 1) return s;
  const std::size_t t = m * (s.trunc_order() + 1) - 1;
  std::vector<Rational> out(t + 1);
  for (std::size_t i = 0; i <= s.trunc_order(); ++i) out[i * m] = s[i];
  return Series(std::move(out), t);
}

Series scale_by_poly(const Series& s, const Poly& p) {
  const std::size_t t = s.trunc_order();
  std::vector<Rational> out(t + 1);
  for (std::size_t j = 0; j < p.size() && j <= t; ++j) {
    const Rational& pj = p.coeff(j);
    if (is_zero(pj)) continue;
    for (std::size_t i = 0; i + j <= t; ++i) out[i + j] += pj * s[i];
  }
  return Series(std::move(out), t);
}

Series inverse(const Series& s) {
  if (is_zero(s[0])) throw PreconditionViolated("series inverse needs a nonzero constant term");
  const std::size_t t = s.trunc_order();
  std::vector<Rational> out(t + 1);
  const Rational inv0 = 1 / s[0];
  out[0] = inv0;
  for (std::size_t n = 1; n <= t; ++n) {
    Rational acc;
    for (std::size_t j = 1; j <= n; ++j)
      if (!is_zero(s[j])) acc += s[j] * out[n - j];
    out[n] = -acc * inv0;
  }
  return Series(std::move(out), t);
}

Series divide(const Series& a, const Series& b) { return a * inverse(b); }

}  // namespace mahlerzero
