#include "mahlerzero/cli/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

#include "mahlerzero/errors.hpp"
#include "mahlerzero/parser.hpp"

namespace mahlerzero::cli {

namespace {

std::vector<Poly> polys(std::initializer_list<const char*> texts) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(parse_univariate(t));
  return out;
}

std::vector<Rational> rationals(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

RationalFunction rational(const char* p, const char* q) {
  return RationalFunction{parse_univariate(p), parse_univariate(q)};
}

AlgebraicFunction algebraic(const char* p, long branch0) {
  return AlgebraicFunction(parse_poly(p), Rational(branch0));
}

std::string ratio_string(std::size_t nu, std::size_t bound) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", bound == 0 ? 0.0 : static_cast<double>(nu) / static_cast<double>(bound));
  return buf;
}

std::string nu_string(const Valuation& v) {
  return v.is_finite() ? std::to_string(v.value()) : "above:" + std::to_string(v.value());
}

std::string flag_string(const CaseResult& r) {
  if (!r.error.empty()) return "error";
  if (!r.expected_matches()) return "expected_mismatch";
  if (r.certificate->status != Status::certified) return "bound_violated";
  return "ok";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

CaseResult run_case(const CorpusCase& c) {
  CaseResult r;
  r.id = c.id;
  r.expected_nu = c.expected_nu;
  r.d_F = c.mahler.degree();
  r.A_F = c.mahler.height();
  r.k = c.mahler.k();
  try {
    r.certificate = certified_nu(c.mahler, c.approximant);
    r.n = r.certificate->hypotheses.n;
    r.log_H = r.certificate->hypotheses.log_H;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

const std::vector<NamedMahler>& builtin_mahler_functions() {
  static const std::vector<NamedMahler> functions = [] {
    std::vector<NamedMahler> v;
    v.push_back({"geometric", "1/(1-z): -F(z) + (1+z)F(z^2) = 0 (rational; negative control)",
                 MahlerFunction(2, polys({"-1", "1+z"}), rationals({1}), false)});
    v.push_back({"paperfolding", "regular paperfolding: F(z) - F(z^2) = z/(1-z^4), homogenized",
                 MahlerFunction(2, polys({"z-z^5", "-1-z+z^5+z^8", "1-z^8"}), rationals({0, 1, 1}), true)});
    v.push_back({"sigma2n", "sum z^(2^n): zF(z) - (1+z)F(z^2) + F(z^4) = 0",
                 MahlerFunction(2, polys({"z", "-1-z", "1"}), rationals({0, 1, 1, 0}), true)});
    v.push_back({"sigma3n", "sum z^(3^n): z^2F(z) - (1+z^2)F(z^3) + F(z^9) = 0",
                 MahlerFunction(3, polys({"z^2", "-1-z^2", "1"}), rationals({0, 1, 0, 1}), true)});
    v.push_back({"stern", "Stern diatomic sum s(n+1)z^n: F(z) = (1+z+z^2)F(z^2)",
                 MahlerFunction(2, polys({"1", "-1-z-z^2"}), rationals({1}), true)});
    v.push_back({"thue_morse", "prod (1 - z^(2^n)): F(z) = (1-z)F(z^2)",
                 MahlerFunction(2, polys({"1", "z-1"}), rationals({1}), true)});
    return v;
  }();
  return functions;
}

const std::vector<NamedApproximant>& builtin_approximants() {
  static const std::vector<NamedApproximant> approximants = [] {
    std::vector<NamedApproximant> v;
    v.push_back({"cubic0", "root of y^3 - y - z through 0", algebraic("y^3 - y - z", 0)});
    v.push_back({"geometric_pq", "1/(1-z)", rational("1", "1-z")});
    v.push_back({"inv1pz", "1/(1+z)", rational("1", "1+z")});
    v.push_back({"quad0", "root of y^2 + 2y - z through 0", algebraic("y^2 + 2*y - z", 0)});
    v.push_back({"sqrt1pz", "sqrt(1+z): root of y^2 - (1+z) through 1", algebraic("y^2 - (1+z)", 1)});
    v.push_back({"trunc2", "z + z^2", rational("z + z^2", "1")});
    v.push_back({"trunc4", "z + z^2 + z^4", rational("z + z^2 + z^4", "1")});
    v.push_back({"trunc8", "z + z^2 + z^4 + z^8", rational("z + z^2 + z^4 + z^8", "1")});
    return v;
  }();
  return approximants;
}

const NamedMahler* find_builtin_mahler(const std::string& id) {
  for (const auto& m : builtin_mahler_functions())
    if (m.id == id) return &m;
  return nullptr;
}

const NamedApproximant* find_builtin_approximant(const std::string& id) {
  for (const auto& a : builtin_approximants())
    if (a.id == id) return &a;
  return nullptr;
}

MahlerFunction negative_control() {
  return find_builtin_mahler("geometric")->function.with_irrational_asserted(true);
}

std::vector<CorpusCase> builtin_corpus() {
  // nu values that follow from sum z^(2^n) by hand.
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"sigma2n/trunc2", 4}, {"sigma2n/trunc4", 8}, {"sigma2n/trunc8", 16}, {"sigma2n/quad0", 1}};
  std::vector<CorpusCase> cases;
  for (const auto& m : builtin_mahler_functions()) {
    if (!m.function.irrational_asserted()) continue;
    for (const auto& a : builtin_approximants()) {
      CorpusCase c{m.id + "/" + a.id, m.function, a.function, std::nullopt};
      for (const auto& [id, nu] : expected)
        if (id == c.id) c.expected_nu = nu;
      cases.push_back(std::move(c));
    }
  }
  std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return cases;
}

std::vector<CorpusCase> corpus_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cases") || !j["cases"].is_array())
    throw InputError("corpus file needs a \"cases\" array");
  std::vector<CorpusCase> cases;
  std::set<std::string> seen;
  for (const auto& entry : j["cases"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string())
      throw InputError("every corpus case needs a string \"id\"");
    const std::string id = entry["id"].get<std::string>();
    if (!seen.insert(id).second) throw InputError("duplicate corpus case id \"" + id + "\"");
    if (!entry.contains("mahler") || !entry.contains("approximant"))
      throw InputError("corpus case \"" + id + "\" needs \"mahler\" and \"approximant\"");

    const Json& mj = entry["mahler"];
    std::optional<MahlerFunction> mahler;
    if (mj.is_string()) {
      const std::string name = mj.get<std::string>();
      const NamedMahler* m = name.starts_with("builtin:") ? find_builtin_mahler(name.substr(8)) : nullptr;
      if (m == nullptr) throw InputError("unknown Mahler function \"" + name + "\"");
      mahler = m->function;
    } else {
      mahler = mahler_from_json(mj);
    }

    const Json& aj = entry["approximant"];
    std::optional<Approximant> approx;
    if (aj.is_string()) {
      const std::string name = aj.get<std::string>();
      const NamedApproximant* a =
          name.starts_with("builtin:") ? find_builtin_approximant(name.substr(8)) : nullptr;
      if (a == nullptr) throw InputError("unknown approximant \"" + name + "\"");
      approx = a->function;
    } else {
      approx = approximant_from_json(aj);
    }

    std::optional<std::size_t> expected;
    if (entry.contains("expected_nu")) {
      const Json& e = entry["expected_nu"];
      if (!e.is_number_unsigned()) throw InputError("\"expected_nu\" must be a natural number");
      expected = e.get<std::size_t>();
    }
    cases.push_back(CorpusCase{id, std::move(*mahler), std::move(*approx), expected});
  }
  if (cases.empty()) throw InputError("no cases");
  std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return cases;
}

bool CaseResult::expected_matches() const {
  if (!expected_nu) return true;
  return certificate && certificate->nu.is_finite() && certificate->nu.value() == *expected_nu;
}

bool CaseResult::ok() const {
  return error.empty() && certificate && certificate->status == Status::certified && expected_matches();
}

CorpusReport run_corpus(const std::vector<CorpusCase>& cases, unsigned threads) {
  CorpusReport report;
  report.rows.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) report.rows[i] = run_case(cases[i]);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  std::size_t best_nu = 0, best_bound = 1;
  bool any = false;
  for (const auto& row : report.rows) {
    report.all_ok = report.all_ok && row.ok();
    if (!row.certificate || row.certificate->status != Status::certified) continue;
    const std::size_t nu = row.certificate->nu.value();
    const std::size_t bound = row.certificate->bound;
    // nu/bound > best_nu/best_bound without floating point.
    if (!any || Integer(static_cast<unsigned long>(nu)) * best_bound > Integer(static_cast<unsigned long>(best_nu)) * bound) {
      best_nu = nu;
      best_bound = bound;
      any = true;
    }
  }
  report.max_ratio = any ? ratio_string(best_nu, best_bound) : "NA";
  return report;
}

std::string report_csv(const CorpusReport& r) {
  std::ostringstream out;
  out << "id,d_F,A_F,k,n,log_H,nu,bound,ratio,status,expected_nu,flag\n";
  for (const auto& row : r.rows) {
    out << csv_field(row.id) << ',' << row.d_F << ',' << row.A_F << ',' << row.k << ',';
    if (row.certificate) {
      const auto& c = *row.certificate;
      out << row.n << ',' << row.log_H << ',' << nu_string(c.nu) << ',' << c.bound << ','
          << (c.nu.is_finite() ? ratio_string(c.nu.value(), c.bound) : "NA") << ',' << to_string(c.status);
    } else {
      out << ",,,,,error";
    }
    out << ',' << (row.expected_nu ? std::to_string(*row.expected_nu) : "") << ',' << flag_string(row) << '\n';
  }
  return out.str();
}

Json report_json(const CorpusReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"id", row.id}, {"d_F", row.d_F}, {"A_F", row.A_F}, {"k", row.k}};
    if (row.certificate) {
      const auto& c = *row.certificate;
      j["n"] = row.n;
      j["log_H"] = row.log_H;
      j["nu"] = nu_string(c.nu);
      j["bound"] = c.bound;
      j["ratio"] = c.nu.is_finite() ? ratio_string(c.nu.value(), c.bound) : "NA";
      j["status"] = to_string(c.status);
    } else {
      j["n"] = nullptr;
      j["log_H"] = nullptr;
      j["nu"] = nullptr;
      j["bound"] = nullptr;
      j["ratio"] = nullptr;
      j["status"] = "error";
      j["error"] = row.error;
    }
    j["expected_nu"] = row.expected_nu ? Json(*row.expected_nu) : Json(nullptr);
    j["flag"] = flag_string(row);
    rows.push_back(std::move(j));
  }
  std::size_t failed = 0;
  for (const auto& row : r.rows) failed += row.ok() ? 0 : 1;
  return Json{{"rows", std::move(rows)},
              {"summary", {{"cases", r.rows.size()}, {"failed", failed}, {"max_ratio", r.max_ratio},
                           {"all_ok", r.all_ok}}}};
}

std::string report_text(const CorpusReport& r) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& row : r.rows) {
    out << row.id << ": ";
    if (row.certificate) {
      const auto& c = *row.certificate;
      out << "nu=" << nu_string(c.nu) << " bound=" << c.bound << " (" << to_string(c.bound_kind) << ") "
          << to_string(c.status);
    } else {
      out << "error: " << row.error;
    }
    if (!row.expected_matches()) out << " [expected nu=" << *row.expected_nu << "]";
    out << '\n';
    failed += row.ok() ? 0 : 1;
  }
  out << "cases: " << r.rows.size() << ", failed: " << failed << ", max nu/bound: " << r.max_ratio << '\n';
  return out.str();
}

}  // namespace mahlerzero::cli
