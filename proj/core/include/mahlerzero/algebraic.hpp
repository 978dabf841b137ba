#pragma once

#include <cstddef>

#include "mahlerzero/poly.hpp"
#include "mahlerzero/rational.hpp"
#include "mahlerzero/series.hpp"

namespace mahlerzero {

/// A power series root G(z) of P(z, y), pinned down by its value y0 at
/// z = 0. Only simple rational branches are representable: P(0, y0) = 0
/// and dP/dy(0, y0) != 0 are checked on construction. P is not required
/// to be minimal; its degrees are used as the degree/height bounds.
class AlgebraicFunction {
 public:
  /// Throws PreconditionViolated if deg_y P < 1, NoRationalRoot if
  /// P(0, y0) != 0, SingularBranch if dP/dy(0, y0) = 0.
  AlgebraicFunction(BiPoly annihilator, Rational branch0);

  const BiPoly& annihilator() const noexcept { return annihilator_; }
  const Rational& branch0() const noexcept { return branch0_; }

  /// n = deg_y P.
  std::size_t degree() const { return static_cast<std::size_t>(annihilator_.deg_y()); }
  /// deg_z P, i.e. the logarithm of the height.
  std::size_t log_height() const { return static_cast<std::size_t>(annihilator_.deg_z()); }

 private:
  BiPoly annihilator_;
  Rational branch0_;
};

/// P(z, y(z)) truncated at the order of y.
Series substitute(const BiPoly& p, const Series& y);

/// The branch to order N (Newton iteration with precision doubling).
/// P(z, result) vanishes mod z^{N+1}.
Series expand_branch(const AlgebraicFunction& g, std::size_t n);

/// a(z)^{deg_y P} P(z^{k^i}, y / a(z)) with the denominators cleared, i.e.
/// sum_j g_j(z^{k^i}) a(z)^{deg_y P - j} y^j. It annihilates a(z) G(z^{k^i})
/// whenever P annihilates G. Rejects a = 0.
BiPoly twist(const BiPoly& p, const Poly& a, std::size_t k, std::size_t i);

/// D(z, x) = res_y(P_f(z, y), P_g(z, x - y)), returned with x in the outer
/// slot. D vanishes at x = f + g for every root f of P_f and g of P_g.
/// Throws DegenerateResultant if D is identically zero.
BiPoly sum_annihilator(const BiPoly& pf, const BiPoly& pg);

/// nu(a_0) where a_0 is the y-free coefficient of P; an upper bound for the
/// valuation of any power series root. Rejects a_0 = 0.
std::size_t valuation_bound(const BiPoly& p);

}  // namespace mahlerzero
