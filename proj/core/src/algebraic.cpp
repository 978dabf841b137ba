#include "mahlerzero/algebraic.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "mahlerzero/errors.hpp"
#include "mahlerzero/modular_resultant.hpp"

namespace mahlerzero {

AlgebraicFunction::AlgebraicFunction(BiPoly annihilator, Rational branch0)
    : annihilator_(std::move(annihilator)), branch0_(std::move(branch0)) {
  if (annihilator_.is_zero() || annihilator_.deg_y() < 1)
    throw PreconditionViolated("an algebraic function needs deg_y P >= 1");
  if (!is_zero(annihilator_(0, branch0_)))
    throw NoRationalRoot("P(0, " + to_string(branch0_) + ") != 0");
  if (is_zero(annihilator_.derivative_y()(0, branch0_)))
    throw SingularBranch("dP/dy vanishes at (0, " + to_string(branch0_) + ")");
}

Series substitute(const BiPoly& p, const Series& y) {
  const std::size_t t = y.trunc_order();
  if (p.is_zero()) return Series(t);
  const auto coeffs = p.y_coeffs();
  Series acc = Series::from_poly(coeffs.back(), t);
  for (std::size_t j = coeffs.size() - 1; j-- > 0;)
    acc = acc * y + Series::from_poly(coeffs[j], t);
  return acc;
}

Series expand_branch(const AlgebraicFunction& g, std::size_t n) {
  const BiPoly& p = g.annihilator();
  const BiPoly dp = p.derivative_y();
  std::vector<Rational> y{g.branch0()};
  // y is correct mod z^known.
  std::size_t known = 1;
  while (known < n + 1) {
    const std::size_t next = std::min(2 * known, n + 1);
    const Series current(y, next - 1);
    const Series residual = substitute(p, current);
    const Series slope = substitute(dp, current);
    const Series step = residual * inverse(slope);
    const Series updated = current - step;
    y.assign(updated.coeffs().begin(), updated.coeffs().end());
    known = next;
  }
  return Series(std::move(y), n);
}

BiPoly twist(const BiPoly& p, const Poly& a, std::size_t k, std::size_t i) {
  if (a.is_zero()) throw PreconditionViolated("twist by the zero polynomial");
  if (p.is_zero()) return {};
  std::size_t power = 1;
  for (std::size_t r = 0; r < i; ++r) {
    if (power > std::numeric_limits<std::size_t>::max() / k)
      throw PreconditionViolated("k^i overflows");
    power *= k;
  }
  const std::size_t delta = static_cast<std::size_t>(p.deg_y());
  std::vector<Poly> out(delta + 1);
  Poly a_power(Rational(1));  // a^{delta - j}, built from j = delta downwards
  for (std::size_t j = delta + 1; j-- > 0;) {
    out[j] = p.coeff(j).compose_power(power) * a_power;
    if (j > 0) a_power *= a;
  }
  return BiPoly(std::move(out));
}

BiPoly sum_annihilator(const BiPoly& pf, const BiPoly& pg) {
  if (pf.is_zero() || pg.is_zero() || pf.deg_y() < 1 || pg.deg_y() < 1)
    throw PreconditionViolated("sum_annihilator needs deg_y >= 1 on both inputs");

  // P_f(z, y) with coefficients viewed in Q[z, x] (constant in x).
  std::vector<BiPoly> lifted_f;
  lifted_f.reserve(pf.y_coeffs().size());
  for (const auto& c : pf.y_coeffs()) lifted_f.emplace_back(c);

  // P_g(z, x - y) = sum_j g_j(z) sum_t C(j, t) x^{j-t} (-y)^t.
  const std::size_t dg = static_cast<std::size_t>(pg.deg_y());
  std::vector<std::vector<Poly>> shifted(dg + 1, std::vector<Poly>(dg + 1));
  for (std::size_t j = 0; j <= dg; ++j) {
    const Poly& gj = pg.coeff(j);
    if (gj.is_zero()) continue;
    Integer binom = 1;
    for (std::size_t t = 0; t <= j; ++t) {
      if (t > 0) {
        binom *= static_cast<unsigned long>(j - t + 1);
        binom /= static_cast<unsigned long>(t);
      }
      Rational c(binom);
      if (t % 2 == 1) c = -c;
      shifted[t][j - t] += gj * c;
    }
  }
  std::vector<BiPoly> lifted_g;
  lifted_g.reserve(dg + 1);
  for (auto& x_coeffs : shifted) lifted_g.emplace_back(std::move(x_coeffs));

  BiPoly d = resultant_y_modular(lifted_f, lifted_g);
  if (d.is_zero()) throw DegenerateResultant("res_y(P_f(z,y), P_g(z,x-y)) vanishes identically");
  return d;
}

std::size_t valuation_bound(const BiPoly& p) {
  const Poly& a0 = p.coeff(0);
  if (a0.is_zero()) throw PreconditionViolated("valuation bound needs a nonzero y-free coefficient");
  return a0.order();
}

}  // namespace mahlerzero
