#include <string>
#include <vector>

#include "doctest.h"
#include "mahlerzero/cli/corpus.hpp"
#include "mahlerzero/errors.hpp"
#include "mahlerzero/mahler.hpp"
#include "mahlerzero/parser.hpp"
#include "oracles.hpp"

using namespace mahlerzero;

namespace {

std::vector<Poly> polys(std::initializer_list<const char*> text) {
  std::vector<Poly> out;
  for (const char* t : text) out.push_back(parse_univariate(t));
  return out;
}

std::vector<Rational> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

MahlerFunction sigma2n(std::vector<Rational> seeds = rats({0, 1, 1, 0})) {
  return MahlerFunction(2, polys({"z", "-1-z", "1"}), std::move(seeds), true);
}

MahlerFunction geometric() { return MahlerFunction(2, polys({"-1", "1+z"}), rats({1}), false); }

const MahlerFunction& builtin(const char* id) {
  const auto* m = cli::find_builtin_mahler(id);
  REQUIRE(m != nullptr);
  return m->function;
}

std::vector<Rational> to_vec(const Series& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

TEST_CASE("geometric series from (1+z) F(z^2) = F(z)") {
  const Series s = expand_mahler(geometric(), 6);
  CHECK(s == Series(rats({1, 1, 1, 1, 1, 1, 1}), 6));
}

TEST_CASE("lacunary series from its homogeneous equation") {
  const Series s = expand_mahler(sigma2n(), 16);
  for (std::size_t i = 0; i <= 16; ++i) {
    CAPTURE(i);
    const bool power = i == 1 || i == 2 || i == 4 || i == 8 || i == 16;
    CHECK(s[i] == (power ? 1 : 0));
  }
  CHECK(to_vec(expand_mahler(sigma2n(), 512)) == oracle::lacunary(2, 512));
}

TEST_CASE("inconsistent seeds are reported with both indices") {
  try {
    expand_mahler(sigma2n(rats({0, 1, 5, 0})), 8);
    FAIL("expected InconsistentSeeds");
  } catch (const InconsistentSeeds& e) {
    CHECK(e.equation_index() == 3);
    REQUIRE(e.coefficient_index().has_value());
    CHECK(*e.coefficient_index() == 2);
    CHECK(std::string(e.what()).rfind("InconsistentSeeds at z^2", 0) == 0);
  }
  CHECK_THROWS_AS(expand_mahler(sigma2n(rats({0, 2, 1, 0})), 4), InconsistentSeeds);
  // Constants solve the equation, so a shifted seed vector is consistent.
  CHECK_NOTHROW(expand_mahler(sigma2n(rats({1, 1, 1, 0})), 4));
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(MahlerFunction(1, polys({"-1", "1+z"}), rats({1}), false), PreconditionViolated);
  CHECK_THROWS_AS(MahlerFunction(2, polys({"1"}), rats({1}), false), PreconditionViolated);
  CHECK_THROWS_AS(MahlerFunction(2, polys({"0", "1"}), rats({1}), false), PreconditionViolated);
  CHECK_THROWS_AS(MahlerFunction(2, polys({"1", "0"}), rats({1}), false), PreconditionViolated);
  CHECK_THROWS_AS(sigma2n(rats({0, 1})), InsufficientSeeds);
  CHECK_NOTHROW(sigma2n(rats({0, 1, 1})));
}

TEST_CASE("degree, height and seed threshold") {
  const MahlerFunction m = sigma2n();
  CHECK(m.degree() == 2);
  CHECK(m.height() == 1);
  CHECK(m.seed_threshold() == 2);
  CHECK(builtin("sigma3n").seed_threshold() == 3);
  CHECK(builtin("stern").seed_threshold() == 0);
  CHECK(builtin("paperfolding").height() == 8);
  CHECK_FALSE(m.with_irrational_asserted(false).irrational_asserted());
}

TEST_CASE("built-in functions match direct definitions") {
  const std::size_t n = 512;
  CHECK(to_vec(expand_mahler(builtin("sigma2n"), n)) == oracle::lacunary(2, n));
  CHECK(to_vec(expand_mahler(builtin("sigma3n"), n)) == oracle::lacunary(3, n));
  CHECK(to_vec(expand_mahler(builtin("thue_morse"), n)) == oracle::thue_morse(n));
  CHECK(to_vec(expand_mahler(builtin("stern"), n)) == oracle::stern_shifted(n));
  CHECK(to_vec(expand_mahler(builtin("paperfolding"), n)) == oracle::paperfolding(n));
  std::vector<Rational> ones(n + 1, Rational(1));
  CHECK(to_vec(expand_mahler(builtin("geometric"), n)) == ones);
}

TEST_CASE("verify_equation examples") {
  const MahlerFunction g = geometric();
  CHECK(verify_equation(g, Series(rats({1, 1, 1, 1, 1, 1, 1}), 6)).holds);
  const EquationCheck bad = verify_equation(g, Series(rats({1, 1, 1, 2, 1, 1, 1}), 6));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.first_failure.has_value());
  CHECK(*bad.first_failure == 3);
  CHECK(verify_equation(sigma2n(), Series(40)).holds);
}

TEST_CASE("expansions verify and are prefix-stable across the corpus") {
  for (const auto& entry : cli::builtin_mahler_functions()) {
    CAPTURE(entry.id);
    const Series full = expand_mahler(entry.function, 512);
    CHECK(verify_equation(entry.function, full).holds);
    for (std::size_t n : {0, 1, 5, 64, 200}) CHECK(expand_mahler(entry.function, n) == full.truncated(n));
  }
}

TEST_CASE("solutions form a vector space") {
  const MahlerFunction m = sigma2n();
  const Series s = expand_mahler(m, 128);
  const Series scaled = expand_mahler(sigma2n(rats({0, -3, -3, 0})), 128);
  CHECK(scaled == Rational(-3) * s);
  const Series c = Series(rats({5}), 128);  // constants solve a_0 + a_1 + a_2 = 0
  CHECK(verify_equation(m, c).holds);
  CHECK(expand_mahler(sigma2n(rats({5, 6, 6, 0})), 128) == c + Rational(6) * s);
}

TEST_CASE("perturbing one coefficient breaks the equation") {
  oracle::Generator gen(77);
  for (const auto& entry : cli::builtin_mahler_functions()) {
    Series s = expand_mahler(entry.function, 100);
    std::vector<Rational> c = to_vec(s);
    // z^i is not a solution for i >= 1 (the a_d term has the top degree),
    // and for i <= 10 the defect fits below z^100.
    const auto i = static_cast<std::size_t>(gen.integer(1, 10));
    c[i] += 1;
    CAPTURE(entry.id);
    CAPTURE(i);
    const EquationCheck chk = verify_equation(entry.function, Series(c, 100));
    CHECK_FALSE(chk.holds);
    CHECK(chk.first_failure.has_value());
  }
}
