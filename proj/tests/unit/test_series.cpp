#include <vector>

#include "doctest.h"
#include "mahlerzero/errors.hpp"
#include "mahlerzero/parser.hpp"
#include "mahlerzero/series.hpp"
#include "oracles.hpp"

using namespace mahlerzero;

namespace {

Series make(std::vector<long> c, std::size_t t) {
  std::vector<Rational> r(c.begin(), c.end());
  return Series(std::move(r), t);
}

}  // namespace

TEST_CASE("valuation of a truncated series") {
  CHECK(valuation(make({0, 0, 3}, 5)) == Valuation::finite(2));
  CHECK(valuation(make({1}, 0)) == Valuation::finite(0));
  CHECK(valuation(Series(7)) == Valuation::above(7));
  CHECK(valuation(Series()) == Valuation::above(0));
  CHECK_FALSE(valuation(Series(3)).is_finite());
}

TEST_CASE("padding and cutting to the truncation order") {
  const Series s = make({1, 2, 3, 4}, 1);
  CHECK(s.trunc_order() == 1);
  CHECK(s[1] == 2);
  const Series p = make({1}, 4);
  CHECK(p.coeffs().size() == 5);
  CHECK(p[4] == 0);
  CHECK(make({1, 2, 3}, 2).truncated(1) == make({1, 2}, 1));
}

TEST_CASE("binary operations keep the smaller truncation order") {
  const Series a = make({1, 1, 1, 1, 1, 1}, 5);
  const Series b = make({1, -1, 0, 0}, 3);
  CHECK((a + b).trunc_order() == 3);
  CHECK((a - b).trunc_order() == 3);
  CHECK((a * b).trunc_order() == 3);
  CHECK((b * a).trunc_order() == 3);
  // (1 + z + z^2 + ...)(1 - z) = 1
  CHECK(a * b == make({1}, 3));
  CHECK(a + b == make({2, 0, 1, 1}, 3));
}

TEST_CASE("subtracting agreeing series gives AboveTruncation") {
  const Series a = make({0, 1, 1, 0, 1}, 4);
  const Series b = make({0, 1, 1, 0, 1, 0, 0, 7}, 9);
  CHECK(valuation(a - b) == Valuation::above(4));
}

TEST_CASE("substitute_power extends the known range") {
  const Series s = make({1, 2, 3}, 2);
  const Series t = substitute_power(s, 3);
  CHECK(t.trunc_order() == 8);
  CHECK(t == make({1, 0, 0, 2, 0, 0, 3, 0, 0}, 8));
  CHECK(substitute_power(s, 1) == s);
}

TEST_CASE("scale_by_poly keeps the series truncation") {
  const Series s = make({1, 1, 1}, 2);
  const Series t = scale_by_poly(s, parse_univariate("1 - z + z^5"));
  CHECK(t == make({1, 0, 0}, 2));
}

TEST_CASE("inverse and divide") {
  const Series one_minus_z = make({1, -1}, 6);
  CHECK(inverse(one_minus_z) == make({1, 1, 1, 1, 1, 1, 1}, 6));
  const auto sq = oracle::sqrt_one_plus_z(10);
  const Series root(sq, 10);
  const Series back = divide(root * root, root);
  CHECK(back == root);
  CHECK_THROWS_AS(inverse(make({0, 1}, 3)), PreconditionViolated);
  CHECK_THROWS_AS(divide(one_minus_z, make({0, 1}, 3)), PreconditionViolated);
}

TEST_CASE("ring identities on random series") {
  oracle::Generator gen(11);
  for (int round = 0; round < 50; ++round) {
    const std::size_t t = static_cast<std::size_t>(gen.integer(0, 12));
    std::vector<Rational> ca(t + 1), cb(t + 1), cc(t + 1);
    for (std::size_t i = 0; i <= t; ++i) {
      ca[i] = gen.rational();
      cb[i] = gen.rational();
      cc[i] = gen.rational();
    }
    const Series a(ca, t), b(cb, t), c(cc, t);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Series(t));
    CHECK(Series(oracle::truncated_product(ca, cb, t), t) == a * b);
  }
}
