#include "mahlerzero/cli/json_io.hpp"

#include <fstream>
#include <sstream>
#include <variant>

#include "mahlerzero/errors.hpp"
#include "mahlerzero/parser.hpp"

namespace mahlerzero::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InputError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

/// Rationals may be given as "p/q" strings or as JSON integers.
Rational rational_value(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  throw InputError("expected a rational as a \"p/q\" string or an integer");
}

std::size_t natural_value(const Json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InputError(std::string(what) + " must be a natural number");
  return v.get<std::size_t>();
}

}  // namespace

Json series_to_json(const Series& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"trunc_order", s.trunc_order()}, {"coeffs", std::move(coeffs)}};
}

Series series_from_json(const Json& j) {
  const std::size_t t = natural_value(field(j, "trunc_order"), "trunc_order");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.size() != t + 1)
    throw InputError("series \"coeffs\" must list trunc_order + 1 rationals");
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.push_back(rational_value(v));
  return Series(std::move(c), t);
}

Json mahler_to_json(const MahlerFunction& m) {
  Json coeffs = Json::array();
  for (const auto& a : m.coeffs()) coeffs.push_back(to_string(a));
  Json seeds = Json::array();
  for (const auto& s : m.seeds()) seeds.push_back(to_string(s));
  return Json{{"k", m.k()}, {"coeffs", std::move(coeffs)}, {"seeds", std::move(seeds)},
              {"irrational", m.irrational_asserted()}};
}

MahlerFunction mahler_from_json(const Json& j) {
  const std::size_t k = natural_value(field(j, "k"), "k");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw InputError("\"coeffs\" must be an array of polynomial strings");
  std::vector<Poly> a;
  for (const auto& c : coeffs) {
    if (!c.is_string()) throw InputError("\"coeffs\" entries must be strings");
    a.push_back(parse_univariate(c.get<std::string>()));
  }
  const Json& seeds = field(j, "seeds");
  if (!seeds.is_array()) throw InputError("\"seeds\" must be an array");
  std::vector<Rational> s;
  for (const auto& v : seeds) s.push_back(rational_value(v));
  bool irrational = false;
  if (const auto it = j.find("irrational"); it != j.end()) {
    if (!it->is_boolean()) throw InputError("\"irrational\" must be a boolean");
    irrational = it->get<bool>();
  }
  return MahlerFunction(k, std::move(a), std::move(s), irrational);
}

Json algebraic_to_json(const AlgebraicFunction& g) {
  return Json{{"poly", to_string(g.annihilator())}, {"branch0", to_string(g.branch0())}};
}

AlgebraicFunction algebraic_from_json(const Json& j) {
  BiPoly p = parse_poly(string_field(j, "poly"), Vars::zy);
  return AlgebraicFunction(std::move(p), rational_value(field(j, "branch0")));
}

Json approximant_to_json(const Approximant& g) {
  if (const auto* r = std::get_if<RationalFunction>(&g))
    return Json{{"p", to_string(r->numerator)}, {"q", to_string(r->denominator)}};
  return algebraic_to_json(std::get<AlgebraicFunction>(g));
}

Approximant approximant_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("approximant must be a JSON object");
  if (j.contains("poly")) return algebraic_from_json(j);
  if (j.contains("p")) {
    RationalFunction r;
    r.numerator = parse_univariate(string_field(j, "p"));
    r.denominator = j.contains("q") ? parse_univariate(string_field(j, "q")) : Poly(Rational(1));
    return r;
  }
  throw InputError("approximant needs either \"poly\"/\"branch0\" or \"p\"/\"q\"");
}

Json certificate_to_json(const NuCertificate& c) {
  Json nu = c.nu.is_finite() ? Json(c.nu.value()) : Json{{"above", c.nu.value()}};
  const Hypotheses& h = c.hypotheses;
  Json hyp{{"irrational_asserted", h.irrational_asserted},
           {"degree_height_from_supplied_equation", h.degree_height_from_supplied_equation}};
  if (c.path == Path::rational) hyp["q0_nonzero"] = h.denominator_nonzero_at_zero;
  if (h.branch_regular) hyp["branch_regular"] = true;
  hyp["d_F"] = h.d_F;
  hyp["A_F"] = h.A_F;
  hyp["k"] = h.k;
  hyp["n"] = h.n;
  hyp["log_H"] = h.log_H;
  return Json{{"nu", std::move(nu)},
              {"bound", c.bound},
              {"path", to_string(c.path)},
              {"bound_kind", to_string(c.bound_kind)},
              {"expansion_order", c.expansion_order},
              {"hypotheses", std::move(hyp)},
              {"status", c.status == Status::certified ? "certified" : "bound_violated"}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace mahlerzero::cli
