#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mahlerzero/cli/json_io.hpp"
#include "mahlerzero/mahler.hpp"
#include "mahlerzero/zeroorder.hpp"

namespace mahlerzero::cli {

struct NamedMahler {
  std::string id;
  std::string description;
  MahlerFunction function;
};

struct NamedApproximant {
  std::string id;
  std::string description;
  Approximant function;
};

/// Shipped Mahler functions. Every entry except "geometric" is irrational;
/// "geometric" (1/(1-z)) is the negative control and ships unasserted.
const std::vector<NamedMahler>& builtin_mahler_functions();

/// Shipped approximants: algebraic functions of degree 2 and 3 plus
/// polynomials and rational functions with Q(0) != 0.
const std::vector<NamedApproximant>& builtin_approximants();

const NamedMahler* find_builtin_mahler(const std::string& id);
const NamedApproximant* find_builtin_approximant(const std::string& id);

/// 1/(1-z) from its equation -F(z) + (1+z)F(z^2) = 0, wrongly asserted irrational.
MahlerFunction negative_control();

struct CorpusCase {
  std::string id;
  MahlerFunction mahler;
  Approximant approximant;
  std::optional<std::size_t> expected_nu;
};

/// Every irrational built-in Mahler function against every built-in
/// approximant, sorted by id ("<mahler>/<approximant>").
std::vector<CorpusCase> builtin_corpus();

/// {"cases": [{"id": ..., "mahler": {...} | "builtin:<id>",
///             "approximant": {...} | "builtin:<id>", "expected_nu": 4}, ...]}
/// Throws InputError on duplicate ids or when there are no cases.
std::vector<CorpusCase> corpus_from_json(const Json& j);

struct CaseResult {
  std::string id;
  std::size_t d_F = 0;
  std::size_t A_F = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t log_H = 0;
  std::optional<NuCertificate> certificate;
  std::optional<std::size_t> expected_nu;
  std::string error;  // empty unless the case threw

  bool expected_matches() const;
  /// Certified, and equal to the expected nu when one is given.
  bool ok() const;
};

struct CorpusReport {
  std::vector<CaseResult> rows;  // sorted by id
  /// Largest nu/bound over certified rows, as a decimal string.
  std::string max_ratio;
  bool all_ok = true;
};

/// Runs every case (concurrently when threads > 1). Per-case exceptions
/// are recorded in the row. Row order never depends on scheduling.
CorpusReport run_corpus(const std::vector<CorpusCase>& cases, unsigned threads = 1);

/// Columns: id,d_F,A_F,k,n,log_H,nu,bound,ratio,status,expected_nu,flag
std::string report_csv(const CorpusReport& r);
Json report_json(const CorpusReport& r);
std::string report_text(const CorpusReport& r);

}  // namespace mahlerzero::cli
