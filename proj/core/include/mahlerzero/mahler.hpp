#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mahlerzero/poly.hpp"
#include "mahlerzero/rational.hpp"
#include "mahlerzero/series.hpp"

namespace mahlerzero {

/// A power series f with a_0(z) f(z) + a_1(z) f(z^k) + ... + a_d(z) f(z^{k^d}) = 0,
/// fixed by its leading coefficients (the seeds).
///
/// Degree and height are read off the supplied equation; nothing checks
/// that d is minimal, so they are upper bounds for the true d_F and A_F.
/// Irrationality cannot be decided here and is carried as an assertion.
class MahlerFunction {
 public:
  /// Checks k >= 2, d >= 1, a_0 != 0, a_d != 0 (PreconditionViolated) and
  /// the seed count (InsufficientSeeds).
  MahlerFunction(std::size_t k, std::vector<Poly> coeffs, std::vector<Rational> seeds,
                 bool irrational_asserted);

  std::size_t k() const noexcept { return k_; }
  const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
  const std::vector<Rational>& seeds() const noexcept { return seeds_; }
  bool irrational_asserted() const noexcept { return irrational_asserted_; }

  /// d_F as supplied.
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  /// A_F = max deg a_i.
  std::size_t height() const;

  /// Fewest seeds' top index S allowed: ceil(nu(a_0) k / (k - 1)).
  std::size_t seed_threshold() const;

  MahlerFunction with_irrational_asserted(bool asserted) const;

 private:
  std::size_t k_;
  std::vector<Poly> coeffs_;
  std::vector<Rational> seeds_;
  bool irrational_asserted_;
};

/// Coefficients f_0 .. f_N. Equations whose top unknown is seeded are
/// checked instead of solved; a failure throws InconsistentSeeds.
Series expand_mahler(const MahlerFunction& m, std::size_t n);

struct EquationCheck {
  bool holds = true;
  std::optional<std::size_t> first_failure;
};

/// Whether sum_i a_i(z) s(z^{k^i}) vanishes through the truncation order of s.
EquationCheck verify_equation(const MahlerFunction& m, const Series& s);

}  // namespace mahlerzero
