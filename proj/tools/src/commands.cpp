#include "mahlerzero/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mahlerzero/algebraic.hpp"
#include "mahlerzero/cli/corpus.hpp"
#include "mahlerzero/cli/json_io.hpp"
#include "mahlerzero/errors.hpp"
#include "mahlerzero/mahler.hpp"
#include "mahlerzero/zeroorder.hpp"

namespace mahlerzero::cli {

namespace {

constexpr const char* kBuiltinPrefix = "builtin:";

MahlerFunction load_mahler(const std::string& source) {
  if (source.starts_with(kBuiltinPrefix)) {
    const NamedMahler* m = find_builtin_mahler(source.substr(8));
    if (m == nullptr) throw InputError("unknown built-in Mahler function \"" + source + "\"");
    return m->function;
  }
  return mahler_from_json(load_json_file(source));
}

Approximant load_approximant(const std::string& source) {
  if (source.starts_with(kBuiltinPrefix)) {
    const NamedApproximant* a = find_builtin_approximant(source.substr(8));
    if (a == nullptr) throw InputError("unknown built-in approximant \"" + source + "\"");
    return a->function;
  }
  return approximant_from_json(load_json_file(source));
}

AlgebraicFunction load_algebraic(const std::string& source) {
  Approximant a = load_approximant(source);
  if (auto* g = std::get_if<AlgebraicFunction>(&a)) return std::move(*g);
  throw InputError(source + " is a rational function, not an algebraic one");
}

void print_series(const Series& s, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << series_to_json(s).dump(2) << '\n';
  } else if (format == "csv") {
    out << "index,coefficient\n";
    for (std::size_t i = 0; i <= s.trunc_order(); ++i) out << i << ',' << to_string(s[i]) << '\n';
  } else {
    const auto c = s.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << to_string(c[i]);
    out << '\n';
  }
}

std::string lower_output_path(std::string path, const char* ext) {
  for (const char* known : {".csv", ".json"}) {
    const std::string k(known);
    if (path.size() > k.size() && path.ends_with(k)) {
      path.resize(path.size() - k.size());
      break;
    }
  }
  return path + ext;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << content;
}

struct Options {
  // expand
  std::string mahler_file;
  std::string algebraic_file;
  std::size_t order = 0;
  // nu
  std::string nu_mahler;
  std::string nu_approximant;
  // bound
  std::size_t d_F = 0, A_F = 0, k = 2;
  std::optional<std::size_t> n, log_H, deg_P, deg_Q;
  // annihilate
  std::string ann_mahler, ann_algebraic;
  std::size_t check_order = 64;
  // corpus
  std::string corpus_file;
  std::string out_path;
  unsigned threads = 1;
  std::string format = "text";
  std::string nu_format = "json";
};

int cmd_expand(const Options& o, std::ostream& out) {
  if (o.mahler_file.empty() == o.algebraic_file.empty())
    throw InputError("expand needs exactly one of --mahler or --algebraic");
  const Series s = o.mahler_file.empty() ? expand_branch(load_algebraic(o.algebraic_file), o.order)
                                          : expand_mahler(load_mahler(o.mahler_file), o.order);
  print_series(s, o.format, out);
  return kOk;
}

int cmd_nu(const Options& o, std::ostream& out) {
  const MahlerFunction m = load_mahler(o.nu_mahler);
  const Approximant g = load_approximant(o.nu_approximant);
  const NuCertificate cert = certified_nu(m, g);
  if (o.nu_format == "text") {
    out << "nu = " << (cert.nu.is_finite() ? std::to_string(cert.nu.value()) : "> " + std::to_string(cert.nu.value()))
        << ", bound = " << cert.bound << " (" << to_string(cert.bound_kind) << "), " << to_string(cert.status)
        << '\n';
  } else {
    out << certificate_to_json(cert).dump(2) << '\n';
  }
  return cert.status == Status::certified ? kOk : kBoundViolated;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const MahlerParams f{o.d_F, o.A_F, o.k};
  if (f.k < 2) throw InputError("-k must be >= 2");
  Json j = Json::object();
  if (o.deg_P || o.deg_Q) j["lemma1"] = bound_rational(f, o.deg_P.value_or(0), o.deg_Q.value_or(0)).get_str();
  if (o.n || o.log_H) {
    if (!o.n || !o.log_H) throw InputError("the algebraic bounds need both -n and --logH");
    if (*o.n < 1) throw InputError("-n must be >= 1");
    j["theorem1"] = bound_algebraic(f, *o.n, *o.log_H).get_str();
    if (*o.log_H >= *o.n)
      j["refined"] = bound_refined(f, *o.n, *o.log_H).get_str();
    else
      j["refined"] = nullptr;
  }
  if (j.empty()) throw InputError("bound needs --degP/--degQ and/or -n/--logH");
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [kind, value] : j.items())
      out << kind << ": " << (value.is_null() ? std::string("n/a (needs log_H >= n)") : value.get<std::string>())
          << '\n';
  }
  return kOk;
}

int cmd_annihilate(const Options& o, std::ostream& out) {
  const MahlerFunction m = load_mahler(o.ann_mahler);
  const AlgebraicFunction g = load_algebraic(o.ann_algebraic);
  const MgAnnihilator ann = mg_annihilator(m, g);
  const Series mg = mg_series(m, g, o.check_order);
  const bool kills = !valuation(substitute(ann.polynomial, mg)).is_finite();
  const bool within = Integer(static_cast<unsigned long>(ann.profile.delta_y)) <= ann.bounds.delta_y &&
                      Integer(static_cast<unsigned long>(ann.profile.delta_z)) <= ann.bounds.delta_z;
  if (o.format == "json") {
    Json j{{"polynomial", to_string(ann.polynomial, 'x')},
           {"nonzero_terms", ann.nonzero_terms},
           {"profile", {{"delta_x", ann.profile.delta_y}, {"delta_z", ann.profile.delta_z}}},
           {"degree_bounds", {{"delta_x", ann.bounds.delta_y.get_str()}, {"delta_z", ann.bounds.delta_z.get_str()}}},
           {"within_bounds", within},
           {"annihilates_mod_z", o.check_order + 1},
           {"annihilates", kills}};
    out << j.dump(2) << '\n';
  } else {
    out << "D(z,x) = " << to_string(ann.polynomial, 'x') << '\n'
        << "terms folded: " << ann.nonzero_terms << '\n'
        << "profile: deg_x = " << ann.profile.delta_y << ", deg_z = " << ann.profile.delta_z << '\n'
        << "degree bounds: deg_x <= " << ann.bounds.delta_y.get_str() << ", deg_z <= "
        << ann.bounds.delta_z.get_str() << (within ? " (ok)" : " (VIOLATED)") << '\n'
        << "annihilates M_G mod z^" << o.check_order + 1 << ": " << (kills ? "yes" : "no") << '\n';
  }
  return within && kills ? kOk : kInternal;
}

int cmd_corpus_run(const Options& o, std::ostream& out) {
  const std::vector<CorpusCase> cases =
      o.corpus_file.empty() ? builtin_corpus() : corpus_from_json(load_json_file(o.corpus_file));
  const CorpusReport report = run_corpus(cases, o.threads);
  if (!o.out_path.empty()) {
    write_file(lower_output_path(o.out_path, ".csv"), report_csv(report));
    write_file(lower_output_path(o.out_path, ".json"), report_json(report).dump(2) + "\n");
  }
  if (o.format == "csv")
    out << report_csv(report);
  else if (o.format == "json")
    out << report_json(report).dump(2) << '\n';
  else
    out << report_text(report);
  return report.all_ok ? kOk : kCorpusFailures;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified vanishing orders between Mahler functions and algebraic functions", "mahlerzero"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats = {"text", "json", "csv"};

  auto* expand = app.add_subcommand("expand", "Expand a Mahler function or an algebraic branch");
  expand->add_option("--mahler", o.mahler_file, "MahlerFunction JSON file or builtin:<id>");
  expand->add_option("--algebraic", o.algebraic_file, "AlgebraicFunction JSON file or builtin:<id>");
  expand->add_option("-N", o.order, "Expansion order (coefficients z^0 .. z^N)")->required();
  expand->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* nu = app.add_subcommand("nu", "Certify nu(F - G)");
  nu->add_option("mahler", o.nu_mahler, "MahlerFunction JSON file or builtin:<id>")->required();
  nu->add_option("approximant", o.nu_approximant, "Approximant JSON file or builtin:<id>")->required();
  nu->add_option("--format", o.nu_format)->check(CLI::IsMember(formats));

  auto* bound = app.add_subcommand("bound", "Evaluate the zero-order bounds");
  bound->add_option("--dF", o.d_F, "Degree of the Mahler function")->required();
  bound->add_option("--AF", o.A_F, "Height of the Mahler function")->required();
  bound->add_option("-k", o.k, "Radix")->required();
  bound->add_option("-n", o.n, "Degree bound of the algebraic approximant");
  bound->add_option("--logH", o.log_H, "deg_z of the approximant's polynomial");
  bound->add_option("--degP", o.deg_P, "Numerator degree (rational approximant)");
  bound->add_option("--degQ", o.deg_Q, "Denominator degree (rational approximant)");
  bound->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* annihilate = app.add_subcommand("annihilate", "Build the annihilator of M_G");
  annihilate->add_option("--mahler", o.ann_mahler, "MahlerFunction JSON file or builtin:<id>")->required();
  annihilate->add_option("--algebraic", o.ann_algebraic, "AlgebraicFunction JSON file or builtin:<id>")
      ->required();
  annihilate->add_option("-N", o.check_order, "Check annihilation mod z^(N+1)");
  annihilate->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* corpus = app.add_subcommand("corpus", "Corpus runs");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "Certify every corpus case");
  corpus_run->add_option("--corpus", o.corpus_file, "Corpus JSON file (default: built-in corpus)");
  corpus_run->add_option("--out", o.out_path, "Write PATH.csv and PATH.json");
  corpus_run->add_option("--threads", o.threads, "Worker threads")->default_val(std::thread::hardware_concurrency());
  corpus_run->add_option("--format", o.format)->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*expand) return cmd_expand(o, out);
    if (*nu) return cmd_nu(o, out);
    if (*bound) return cmd_bound(o, out);
    if (*annihilate) return cmd_annihilate(o, out);
    if (*corpus_run) return cmd_corpus_run(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ExpansionError& e) {
    err << e.what() << '\n';
    return kExpansionError;
  } catch (const DegenerateResultant& e) {
    err << "DegenerateResultant: " << e.what() << '\n';
    return kExpansionError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInputError;
}

}  // namespace mahlerzero::cli
