#include <string>

#include "doctest.h"
#include "mahlerzero/errors.hpp"
#include "mahlerzero/parser.hpp"
#include "mahlerzero/poly.hpp"
#include "mahlerzero/rational.hpp"
#include "oracles.hpp"

using namespace mahlerzero;

TEST_CASE("rational printing and parsing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("degree and order") {
  CHECK(Poly().degree() == kNegInfinity);
  CHECK(Poly(Rational(3)).degree() == 0);
  const Poly p = parse_univariate("z^2 + z^5");
  CHECK(p.degree() == 5);
  CHECK(p.order() == 2);
  CHECK(p.coeff(9) == 0);
  CHECK(Poly(std::vector<Rational>{1, 0, 0}).degree() == 0);
}

TEST_CASE("compose_power") {
  const Poly p = parse_univariate("1 + 2*z");
  CHECK(p.compose_power(3) == parse_univariate("1 + 2*z^3"));
  CHECK(Poly().compose_power(4).is_zero());
}

TEST_CASE("exact division") {
  const Poly a = parse_univariate("z^2 - 1");
  CHECK(divexact(a, parse_univariate("z - 1")) == parse_univariate("z + 1"));
  CHECK_THROWS_AS(divexact(a, parse_univariate("z - 2")), InternalError);
}

TEST_CASE("parsing") {
  CHECK(parse_poly("y^2 + 2*y - z") == BiPoly::y() * BiPoly::y() + BiPoly::y() * Rational(2) -
                                            BiPoly(Poly::z()));
  CHECK(parse_univariate("-1-z") == -(Poly(Rational(1)) + Poly::z()));
  CHECK(parse_univariate("(1+z)^2") == parse_univariate("1 + 2*z + z^2"));
  CHECK(parse_univariate("-1/2*z") == Poly::monomial(Rational(-1, 2), 1));
  CHECK(parse_univariate("z - -3") == parse_univariate("z + 3"));
  CHECK(parse_poly(" y ^ 3 - y - z ").deg_y() == 3);
  CHECK(parse_poly("0").is_zero());
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_poly("y^-1");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("exponent must be a natural number") != std::string::npos);
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_poly("2y"), ParseError);
  CHECK_THROWS_AS(parse_poly("(y + 1"), ParseError);
  CHECK_THROWS_AS(parse_poly("y +"), ParseError);
  CHECK_THROWS_AS(parse_poly("x"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_univariate("z + y"), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
}

TEST_CASE("canonical printing") {
  CHECK(to_string(parse_poly("y^2 - (1+z)")) == "y^2 - z - 1");
  CHECK(to_string(parse_univariate("1 - z + 3/2*z^2")) == "3/2*z^2 - z + 1");
  CHECK(to_string(Poly()) == "0");
  CHECK(to_string(parse_poly("(z+1)*y")) == "z*y + y");
}

TEST_CASE("print then parse is the identity on random polynomials") {
  oracle::Generator gen(2024);
  for (int round = 0; round < 200; ++round) {
    const BiPoly p = gen.bipoly(static_cast<std::size_t>(gen.integer(0, 4)),
                                static_cast<std::size_t>(gen.integer(0, 4)));
    const std::string text = to_string(p);
    CAPTURE(text);
    CHECK(parse_poly(text) == p);
  }
}

TEST_CASE("evaluation agrees with an explicit monomial sum") {
  oracle::Generator gen(5);
  for (int round = 0; round < 50; ++round) {
    const BiPoly p = gen.bipoly(3, 3);
    const Rational z = gen.rational(), y = gen.rational();
    Rational expected = 0;
    for (std::size_t j = 0; j < p.y_coeffs().size(); ++j) {
      Rational yj = 1;
      for (std::size_t e = 0; e < j; ++e) yj *= y;
      expected += p.coeff(j)(z) * yj;
    }
    CHECK(p(z, y) == expected);
  }
}

TEST_CASE("degree profile and derivative") {
  const BiPoly p = parse_poly("z^3*y^2 + y - z");
  CHECK(p.profile() == DegreeProfile{2, 3});
  CHECK(p.derivative_y() == parse_poly("2*z^3*y + 1"));
  CHECK(pow(parse_poly("y + z"), 2) == parse_poly("y^2 + 2*z*y + z^2"));
  CHECK(divexact(parse_poly("y^2 - z^2"), parse_poly("y - z")) == parse_poly("y + z"));
}
