#pragma once

#include <cstddef>
#include <variant>

#include "mahlerzero/algebraic.hpp"
#include "mahlerzero/mahler.hpp"
#include "mahlerzero/poly.hpp"
#include "mahlerzero/rational.hpp"
#include "mahlerzero/series.hpp"

namespace mahlerzero {

/// Degree, height and radix of the Mahler function in a bound.
struct MahlerParams {
  std::size_t d_F = 0;
  std::size_t A_F = 0;
  std::size_t k = 2;

  static MahlerParams of(const MahlerFunction& m) { return {m.degree(), m.height(), m.k()}; }
};

/// (k^{d+1} - 1) / (k - 1) = 1 + k + ... + k^d.
Integer geometric_sum(std::size_t k, std::size_t d);

/// A_F + (k^{d_F+1} - 1)/(k - 1) * max(deg P, deg Q): ceiling on
/// nu(F - P/Q) for irrational F and Q(0) != 0.
Integer bound_rational(const MahlerParams& f, std::size_t deg_p, std::size_t deg_q);

/// (d_F+1) A_F n^{d_F+1} + (k^{d_F+1} - 1)/(k - 1) log_H n^{d_F}: ceiling on
/// nu(F - G) for G algebraic of degree <= n and deg_z P_G <= log_H.
Integer bound_algebraic(const MahlerParams& f, std::size_t n, std::size_t log_h);

/// ((d_F+1) A_F + (k^{d_F+1} - 1)/(k - 1)) log_H n^{d_F}. Only defined when
/// log_H >= n >= 1 (PreconditionViolated otherwise); it dominates
/// bound_algebraic there.
Integer bound_refined(const MahlerParams& f, std::size_t n, std::size_t log_h);

/// P(z)/Q(z) with Q(0) != 0 required by certified_nu.
struct RationalFunction {
  Poly numerator;
  Poly denominator;
};

using Approximant = std::variant<AlgebraicFunction, RationalFunction>;

/// Sum_i a_i(z) G(z^{k^i}) to order N.
Series mg_series(const MahlerFunction& m, const AlgebraicFunction& g, std::size_t n);

struct MgDegreeBounds {
  Integer delta_y;  // Delta_G^{d+1}
  Integer delta_z;  // (d+1) A Delta_G^{d+1} + (k^{d+1}-1)/(k-1) delta_G Delta_G^d
};

struct MgAnnihilator {
  BiPoly polynomial;  // x in the outer slot
  DegreeProfile profile;
  MgDegreeBounds bounds;
  std::size_t nonzero_terms = 0;
};

/// Annihilator of M_G built by twisting P_G for every nonzero a_i and
/// folding the twists with sum_annihilator. The degree profile is checked
/// against the a-priori degree bounds on every call (InternalError if exceeded).
/// Requires deg_y P_G >= 2.
MgAnnihilator mg_annihilator(const MahlerFunction& m, const AlgebraicFunction& g);

enum class Path { rational, algebraic };
enum class BoundKind { lemma1, theorem1, refined };
enum class Status { certified, bound_violated };

const char* to_string(Path p);
const char* to_string(BoundKind b);
const char* to_string(Status s);

/// Facts the certificate rests on. The first two are asserted by the
/// caller, the rest were checked or read off the inputs.
struct Hypotheses {
  bool irrational_asserted = false;
  bool degree_height_from_supplied_equation = true;
  bool denominator_nonzero_at_zero = false;  // rational path
  bool branch_regular = false;               // algebraic path
  std::size_t d_F = 0;
  std::size_t A_F = 0;
  std::size_t k = 2;
  std::size_t n = 1;
  std::size_t log_H = 0;
};

struct NuCertificate {
  Valuation nu = Valuation::above(0);
  std::size_t bound = 0;
  std::size_t expansion_order = 0;
  Path path = Path::rational;
  BoundKind bound_kind = BoundKind::lemma1;
  Hypotheses hypotheses;
  Status status = Status::bound_violated;
};

/// Largest bound certified_nu is willing to expand to.
inline constexpr std::size_t kMaxExpansionOrder = 1'000'000;

/// nu(F - G) decided by expanding both sides to the applicable a-priori
/// bound B. Agreement through z^B cannot happen under the asserted
/// hypotheses and is reported as BoundViolated, not thrown.
NuCertificate certified_nu(const MahlerFunction& m, const Approximant& g);

}  // namespace mahlerzero
