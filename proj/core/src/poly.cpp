#include "mahlerzero/poly.hpp"

#include <algorithm>
#include <string_view>
#include <utility>

#include "mahlerzero/errors.hpp"

namespace mahlerzero {

namespace {

const Rational& zero_rational() {
  static const Rational zero;
  return zero;
}

const Poly& zero_poly() {
  static const Poly zero;
  return zero;
}

struct Monomial {
  Rational coeff;
  std::size_t z_exp = 0;
  std::size_t outer_exp = 0;
};

void append_power(std::string& out, char var, std::size_t exponent) {
  out += var;
  if (exponent > 1) {
    out += '^';
    out += std::to_string(exponent);
  }
}

std::string join_monomials(const std::vector<Monomial>& terms, char outer_var) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t.coeff);
    const bool has_vars = t.z_exp > 0 || t.outer_exp > 0;
    std::string body;
    if (!has_vars || magnitude != 1) body += to_string(magnitude);
    if (t.z_exp > 0) {
      if (!body.empty()) body += '*';
      append_power(body, 'z', t.z_exp);
    }
    if (t.outer_exp > 0) {
      if (!body.empty()) body += '*';
      append_power(body, outer_var, t.outer_exp);
    }
    out += body;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& constant) {
  if (!mahlerzero::is_zero(constant)) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(const Rational& c, std::size_t exponent) {
  if (mahlerzero::is_zero(c)) return {};
  std::vector<Rational> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return Poly(std::move(coeffs));
}

Poly Poly::z() { return monomial(1, 1); }

void Poly::normalize() {
  while (!coeffs_.empty() && mahlerzero::is_zero(coeffs_.back())) coeffs_.pop_back();
}

const Rational& Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

std::size_t Poly::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!mahlerzero::is_zero(coeffs_[i])) return i;
  throw InternalError("order of the zero polynomial");
}

Rational Poly::operator()(const Rational& z) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::compose_power(std::size_t m) const {
  if (m == 0) throw PreconditionViolated("compose_power needs m >= 1");
  if (m == 1 || coeffs_.size() <= 1) return *this;
  std::vector<Rational> out((coeffs_.size() - 1) * m + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * m] = coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (mahlerzero::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly pow(const Poly& base, std::size_t exponent) {
  Poly result(Rational(1));
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

Poly divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InternalError("exact division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InternalError("inexact polynomial division");
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = b.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational q = rem[i + db] / lead;
    quot[i] = q;
    if (is_zero(q)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeff(j);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (!is_zero(rem[i])) throw InternalError("inexact polynomial division");
  return Poly(std::move(quot));
}

std::string to_string(const Poly& p, char var) {
  std::vector<Monomial> terms;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (is_zero(p.coeff(i))) continue;
    terms.push_back({p.coeff(i), 0, i});
  }
  return join_monomials(terms, var);
}

// -------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const Poly& constant) {
  if (!constant.is_zero()) y_coeffs_.push_back(constant);
}

BiPoly::BiPoly(std::vector<Poly> y_coeffs) : y_coeffs_(std::move(y_coeffs)) { normalize(); }

BiPoly BiPoly::y() { return BiPoly(std::vector<Poly>{Poly(), Poly(Rational(1))}); }

void BiPoly::normalize() {
  while (!y_coeffs_.empty() && y_coeffs_.back().is_zero()) y_coeffs_.pop_back();
}

long BiPoly::deg_z() const {
  long d = kNegInfinity;
  for (const auto& c : y_coeffs_) d = std::max(d, c.degree());
  return d;
}

const Poly& BiPoly::coeff(std::size_t j) const {
  return j < y_coeffs_.size() ? y_coeffs_[j] : zero_poly();
}

DegreeProfile BiPoly::profile() const {
  if (is_zero()) throw InternalError("degree profile of the zero polynomial");
  return {static_cast<std::size_t>(deg_y()), static_cast<std::size_t>(deg_z())};
}

std::vector<Rational> BiPoly::at_z(const Rational& c) const {
  std::vector<Rational> out;
  out.reserve(y_coeffs_.size());
  for (const auto& p : y_coeffs_) out.push_back(p(c));
  return out;
}

Rational BiPoly::operator()(const Rational& z, const Rational& y) const {
  Rational acc;
  for (auto it = y_coeffs_.rbegin(); it != y_coeffs_.rend(); ++it) acc = acc * y + (*it)(z);
  return acc;
}

BiPoly BiPoly::derivative_y() const {
  if (y_coeffs_.size() <= 1) return {};
  std::vector<Poly> out;
  out.reserve(y_coeffs_.size() - 1);
  for (std::size_t j = 1; j < y_coeffs_.size(); ++j)
    out.push_back(y_coeffs_[j] * Rational(static_cast<unsigned long>(j)));
  return BiPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.y_coeffs_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (y_coeffs_.size() < rhs.y_coeffs_.size()) y_coeffs_.resize(rhs.y_coeffs_.size());
  for (std::size_t i = 0; i < rhs.y_coeffs_.size(); ++i) y_coeffs_[i] += rhs.y_coeffs_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  if (y_coeffs_.size() < rhs.y_coeffs_.size()) y_coeffs_.resize(rhs.y_coeffs_.size());
  for (std::size_t i = 0; i < rhs.y_coeffs_.size(); ++i) y_coeffs_[i] -= rhs.y_coeffs_[i];
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly> out(a.y_coeffs_.size() + b.y_coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.y_coeffs_.size(); ++i) {
    if (a.y_coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.y_coeffs_.size(); ++j)
      out[i + j] += a.y_coeffs_[i] * b.y_coeffs_[j];
  }
  return BiPoly(std::move(out));
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly& BiPoly::operator*=(const Poly& c) {
  for (auto& x : y_coeffs_) x *= c;
  normalize();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  for (auto& x : y_coeffs_) x *= c;
  normalize();
  return *this;
}

BiPoly pow(const BiPoly& base, std::size_t exponent) {
  BiPoly result(Poly(Rational(1)));
  BiPoly square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw InternalError("exact division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.deg_y() < b.deg_y()) throw InternalError("inexact bivariate division");
  std::vector<Poly> rem(a.y_coeffs().begin(), a.y_coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.deg_y());
  std::vector<Poly> quot(rem.size() - db);
  for (std::size_t i = quot.size(); i-- > 0;) {
    if (rem[i + db].is_zero()) continue;
    Poly q = divexact(rem[i + db], b.leading());
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeff(j);
    quot[i] = std::move(q);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (!rem[i].is_zero()) throw InternalError("inexact bivariate division");
  return BiPoly(std::move(quot));
}

std::string to_string(const BiPoly& p, char outer_var) {
  std::vector<Monomial> terms;
  for (std::size_t j = p.y_coeffs().size(); j-- > 0;) {
    const Poly& c = p.coeff(j);
    for (std::size_t i = c.size(); i-- > 0;) {
      if (is_zero(c.coeff(i))) continue;
      terms.push_back({c.coeff(i), i, j});
    }
  }
  return join_monomials(terms, outer_var);
}

}  // namespace mahlerzero
