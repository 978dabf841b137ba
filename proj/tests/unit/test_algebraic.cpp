#include <vector>

#include "doctest.h"
#include "mahlerzero/algebraic.hpp"
#include "mahlerzero/errors.hpp"
#include "mahlerzero/parser.hpp"
#include "oracles.hpp"

using namespace mahlerzero;

namespace {

std::vector<Rational> to_vec(const Series& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

AlgebraicFunction alg(const char* p, long y0) { return AlgebraicFunction(parse_poly(p), Rational(y0)); }

}  // namespace

TEST_CASE("construction checks the branch") {
  CHECK_NOTHROW(alg("y^2 - (1+z)", 1));
  CHECK_THROWS_AS(alg("y^2 - z^2", 0), SingularBranch);
  CHECK_THROWS_AS(alg("y^2 - (1+z)", 2), NoRationalRoot);
  CHECK_THROWS_AS(alg("1 + z", 0), PreconditionViolated);
  const auto g = alg("y^3 - y - z", 0);
  CHECK(g.degree() == 3);
  CHECK(g.log_height() == 1);
}

TEST_CASE("sqrt(1+z) branch") {
  const Series s = expand_branch(alg("y^2 - (1+z)", 1), 3);
  CHECK(s == Series({Rational(1), Rational(1, 2), Rational(-1, 8), Rational(1, 16)}, 3));
  const Series neg = expand_branch(alg("y^2 - (1+z)", -1), 3);
  CHECK(neg == -s);
  const std::size_t n = 40;
  CHECK(to_vec(expand_branch(alg("y^2 - (1+z)", 1), n)) == oracle::sqrt_one_plus_z(n));
}

TEST_CASE("linear annihilator gives the polynomial") {
  for (std::size_t n : {0, 1, 2, 5, 17}) {
    const Series s = expand_branch(alg("y - (z^2 + 3)", 3), n);
    CHECK(s == Series::from_poly(parse_univariate("z^2 + 3"), n));
  }
}

TEST_CASE("Newton expansion annihilates P to the requested order") {
  oracle::Generator gen(17);
  for (int round = 0; round < 40; ++round) {
    const auto [p, y0] = gen.bipoly_with_branch(static_cast<std::size_t>(gen.integer(1, 4)),
                                                static_cast<std::size_t>(gen.integer(0, 3)));
    const AlgebraicFunction g(p, y0);
    const std::size_t n = static_cast<std::size_t>(gen.integer(0, 24));
    const Series s = expand_branch(g, n);
    CHECK(s.trunc_order() == n);
    CHECK(s[0] == y0);
    CHECK(oracle::all_zero(oracle::eval_at_series(p, to_vec(s), n)));
  }
}

TEST_CASE("expansions are prefix-stable") {
  const auto g = alg("y^3 - y - z", 0);
  const Series long_run = expand_branch(g, 50);
  for (std::size_t n : {0, 1, 7, 8, 9, 31})
    CHECK(expand_branch(g, n) == long_run.truncated(n));
}

TEST_CASE("substitute agrees with the naive oracle") {
  oracle::Generator gen(23);
  for (int round = 0; round < 30; ++round) {
    const BiPoly p = gen.bipoly(static_cast<std::size_t>(gen.integer(0, 4)), 3);
    const std::size_t t = static_cast<std::size_t>(gen.integer(0, 10));
    std::vector<Rational> y(t + 1);
    for (auto& c : y) c = gen.rational();
    CHECK(to_vec(substitute(p, Series(y, t))) == oracle::eval_at_series(p, y, t));
  }
}

TEST_CASE("twist examples") {
  const BiPoly pg = parse_poly("y^2 - (1+z)");
  const BiPoly t = twist(pg, Poly::z(), 2, 1);
  CHECK(t == parse_poly("y^2 - z^2*(1 + z^2)"));
  CHECK(t.deg_z() == 4);
  CHECK(twist(pg, Poly(Rational(1)), 2, 0) == pg);
  const BiPoly cubic = parse_poly("z*y^3 + 2*y - z^2");
  CHECK(twist(cubic, Poly(Rational(1)), 3, 0) == cubic);
  CHECK_THROWS_AS(twist(pg, Poly(), 2, 1), PreconditionViolated);
}

TEST_CASE("twists annihilate a(z) G(z^{k^i}) within the degree bounds") {
  oracle::Generator gen(31);
  for (int round = 0; round < 30; ++round) {
    const auto [p, y0] = gen.bipoly_with_branch(static_cast<std::size_t>(gen.integer(1, 3)),
                                                static_cast<std::size_t>(gen.integer(0, 2)));
    const Poly a = gen.poly(static_cast<std::size_t>(gen.integer(0, 2)));
    const std::size_t k = static_cast<std::size_t>(gen.integer(2, 3));
    const std::size_t i = static_cast<std::size_t>(gen.integer(0, 2));
    std::size_t ki = 1;
    for (std::size_t e = 0; e < i; ++e) ki *= k;
    const BiPoly t = twist(p, a, k, i);
    const auto big_delta = static_cast<std::size_t>(p.deg_y());
    const auto small_delta = static_cast<std::size_t>(p.deg_z());
    CHECK(t.deg_y() == p.deg_y());
    CHECK(static_cast<std::size_t>(t.deg_z()) <= static_cast<std::size_t>(a.degree()) * big_delta + ki * small_delta);

    const std::size_t n = 20;
    const Series g = expand_branch(AlgebraicFunction(p, y0), n);
    std::vector<Rational> gk(n + 1);
    for (std::size_t j = 0; j * ki <= n; ++j) gk[j * ki] = g[j];
    std::vector<Rational> av(a.coeffs().begin(), a.coeffs().end());
    const auto target = oracle::truncated_product(av, gk, n);
    CHECK(oracle::all_zero(oracle::eval_at_series(t, target, n)));
  }
}

TEST_CASE("sum annihilator of two square roots") {
  const BiPoly pf = parse_poly("y^2 - (1+z)");
  const BiPoly d = sum_annihilator(pf, pf);
  // Roots are 0, 0, 2r, -2r with r^2 = 1 + z.
  const BiPoly expected = parse_poly("y^4 - 4*(1+z)*y^2");
  REQUIRE(d.deg_y() == 4);
  CHECK(d.leading().degree() == 0);
  CHECK(d * (Rational(1) / d.leading().coeff(0)) == expected);
}

TEST_CASE("sum annihilator with a linear factor is a shift") {
  const BiPoly pf = parse_poly("y - (z + z^3)");
  const BiPoly pg = parse_poly("z*y^3 + y^2 - 2*z");
  const BiPoly d = sum_annihilator(pf, pg);
  // P_g(z, x - p(z)) with x renamed y
  BiPoly shifted;
  const BiPoly x_minus_p = parse_poly("y - (z + z^3)");
  for (std::size_t j = 0; j < pg.y_coeffs().size(); ++j) shifted += pow(x_minus_p, j) * pg.coeff(j);
  REQUIRE(d.deg_y() == shifted.deg_y());
  const Rational scale = d.leading().coeff(1) / shifted.leading().coeff(1);
  CHECK(d == shifted * scale);
}

TEST_CASE("sum annihilator degree bounds and annihilation on random pairs") {
  oracle::Generator gen(1234);
  int with_branches = 0;
  for (int round = 0; round < 200; ++round) {
    const bool branch = round % 2 == 0;
    const auto dyf = static_cast<std::size_t>(gen.integer(1, 4));
    const auto dyg = static_cast<std::size_t>(gen.integer(1, 4));
    const auto dzf = static_cast<std::size_t>(gen.integer(0, 4));
    const auto dzg = static_cast<std::size_t>(gen.integer(0, 4));
    BiPoly pf, pg;
    Rational f0, g0;
    if (branch) {
      std::tie(pf, f0) = gen.bipoly_with_branch(dyf, dzf);
      std::tie(pg, g0) = gen.bipoly_with_branch(dyg, dzg);
    } else {
      pf = gen.bipoly(dyf, dzf);
      pg = gen.bipoly(dyg, dzg);
    }
    const BiPoly d = sum_annihilator(pf, pg);
    const auto big_f = static_cast<std::size_t>(pf.deg_y());
    const auto big_g = static_cast<std::size_t>(pg.deg_y());
    const auto small_f = static_cast<std::size_t>(pf.deg_z());
    const auto small_g = static_cast<std::size_t>(pg.deg_z());
    CHECK(static_cast<std::size_t>(d.deg_y()) <= big_f * big_g);
    CHECK(static_cast<std::size_t>(d.deg_z()) <= small_f * big_g + small_g * big_f);
    if (branch) {
      ++with_branches;
      const std::size_t n = 32;
      const Series f = expand_branch(AlgebraicFunction(pf, f0), n);
      const Series g = expand_branch(AlgebraicFunction(pg, g0), n);
      CHECK(oracle::all_zero(oracle::eval_at_series(d, to_vec(f + g), n)));
    }
  }
  CHECK(with_branches == 100);
}

TEST_CASE("sum annihilator rejects y-free inputs") {
  CHECK_THROWS_AS(sum_annihilator(parse_poly("y - z"), parse_poly("1 + z")), PreconditionViolated);
  CHECK_THROWS_AS(sum_annihilator(BiPoly(), parse_poly("y")), PreconditionViolated);
  // Shared roots do not make D vanish: y - z with itself gives (x - 2z) up to scale.
  const BiPoly d = sum_annihilator(parse_poly("y - z"), parse_poly("y - z"));
  CHECK(d * (Rational(1) / d.leading().coeff(0)) == parse_poly("y - 2*z"));
}

TEST_CASE("valuation bound") {
  CHECK(valuation_bound(parse_poly("y^2 + 2*y - z")) == 1);
  CHECK(valuation_bound(parse_poly("y^2 - (1+z)")) == 0);
  CHECK_THROWS_AS(valuation_bound(parse_poly("y^2 + y")), PreconditionViolated);
  const Series g = expand_branch(alg("y^2 + 2*y - z", 0), 6);
  CHECK(valuation(g) == Valuation::finite(1));
  CHECK(g[1] == Rational(1, 2));
  CHECK(g[2] == Rational(-1, 8));
}
