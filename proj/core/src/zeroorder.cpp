#include "mahlerzero/zeroorder.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "mahlerzero/errors.hpp"

namespace mahlerzero {

namespace {

Integer power(std::size_t base, std::size_t exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

Integer natural(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

std::size_t to_expansion_order(const Integer& bound) {
  if (bound > natural(kMaxExpansionOrder))
    throw PreconditionViolated("bound " + bound.get_str() + " exceeds the expansion limit");
  return bound.get_ui();
}

std::size_t nonnegative_degree(const Poly& p) { return p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()); }

}  // namespace

Integer geometric_sum(std::size_t k, std::size_t d) {
  if (k < 2) throw PreconditionViolated("radix k must be >= 2");
  return (power(k, d + 1) - 1) / natural(k - 1);
}

Integer bound_rational(const MahlerParams& f, std::size_t deg_p, std::size_t deg_q) {
  return natural(f.A_F) + geometric_sum(f.k, f.d_F) * natural(std::max(deg_p, deg_q));
}

Integer bound_algebraic(const MahlerParams& f, std::size_t n, std::size_t log_h) {
  if (n < 1) throw PreconditionViolated("algebraic degree bound n must be >= 1");
  return natural(f.d_F + 1) * natural(f.A_F) * power(n, f.d_F + 1) +
         geometric_sum(f.k, f.d_F) * natural(log_h) * power(n, f.d_F);
}

Integer bound_refined(const MahlerParams& f, std::size_t n, std::size_t log_h) {
  if (n < 1 || log_h < n)
    throw PreconditionViolated("refined bound needs log_H >= n >= 1 (got log_H = " + std::to_string(log_h) +
                               ", n = " + std::to_string(n) + ")");
  return (natural(f.d_F + 1) * natural(f.A_F) + geometric_sum(f.k, f.d_F)) * natural(log_h) *
         power(n, f.d_F);
}

Series mg_series(const MahlerFunction& m, const AlgebraicFunction& g, std::size_t n) {
  const Series branch = expand_branch(g, n);
  Series total(n);
  std::size_t stride = 1;
  for (const auto& a : m.coeffs()) {
    if (!a.is_zero()) total = total + scale_by_poly(substitute_power(branch, stride).truncated(n), a);
    stride *= m.k();
  }
  return total;
}

MgAnnihilator mg_annihilator(const MahlerFunction& m, const AlgebraicFunction& g) {
  const std::size_t delta = g.degree();
  if (delta < 2) throw PreconditionViolated("mg_annihilator needs deg_y P_G >= 2; use the rational path");
  const BiPoly& pg = g.annihilator();
  const std::size_t d = m.degree();

  MgAnnihilator out;
  BiPoly acc;
  for (std::size_t i = 0; i <= d; ++i) {
    const Poly& a = m.coeffs()[i];
    if (a.is_zero()) continue;
    BiPoly term = twist(pg, a, m.k(), i);
    acc = out.nonzero_terms == 0 ? std::move(term) : sum_annihilator(acc, term);
    ++out.nonzero_terms;
  }
  out.polynomial = std::move(acc);
  out.profile = out.polynomial.profile();
  out.bounds.delta_y = power(delta, d + 1);
  out.bounds.delta_z = natural(d + 1) * natural(m.height()) * power(delta, d + 1) +
                       geometric_sum(m.k(), d) * natural(g.log_height()) * power(delta, d);

  if (natural(out.profile.delta_y) > power(delta, out.nonzero_terms) ||
      natural(out.profile.delta_y) > out.bounds.delta_y || natural(out.profile.delta_z) > out.bounds.delta_z)
    throw InternalError("M_G annihilator exceeds its degree bounds");
  return out;
}

const char* to_string(Path p) { return p == Path::rational ? "rational" : "algebraic"; }

const char* to_string(BoundKind b) {
  switch (b) {
    case BoundKind::lemma1: return "lemma1";
    case BoundKind::theorem1: return "theorem1";
    case BoundKind::refined: return "refined";
  }
  return "?";
}

const char* to_string(Status s) { return s == Status::certified ? "certified" : "bound_violated"; }

NuCertificate certified_nu(const MahlerFunction& m, const Approximant& g) {
  if (!m.irrational_asserted())
    throw PreconditionViolated("certified_nu needs the Mahler function to be asserted irrational");

  NuCertificate cert;
  const MahlerParams params = MahlerParams::of(m);
  cert.hypotheses.irrational_asserted = true;
  cert.hypotheses.d_F = params.d_F;
  cert.hypotheses.A_F = params.A_F;
  cert.hypotheses.k = params.k;

  std::optional<RationalFunction> rational;
  const AlgebraicFunction* algebraic = nullptr;
  if (const auto* r = std::get_if<RationalFunction>(&g)) {
    rational = *r;
  } else {
    const auto& a = std::get<AlgebraicFunction>(g);
    cert.hypotheses.branch_regular = true;
    if (a.degree() == 1) {
      // g_1(z) y + g_0(z): the branch is -g_0/g_1, and g_1(0) != 0 by regularity.
      rational = RationalFunction{-a.annihilator().coeff(0), a.annihilator().coeff(1)};
    } else {
      algebraic = &a;
    }
  }

  Integer bound;
  if (rational) {
    if (rational->denominator.is_zero() || is_zero(rational->denominator.coeff(0)))
      throw PreconditionViolated("rational approximant needs Q(0) != 0");
    const std::size_t deg_p = nonnegative_degree(rational->numerator);
    const std::size_t deg_q = nonnegative_degree(rational->denominator);
    cert.path = Path::rational;
    cert.bound_kind = BoundKind::lemma1;
    cert.hypotheses.denominator_nonzero_at_zero = true;
    cert.hypotheses.n = 1;
    cert.hypotheses.log_H = std::max(deg_p, deg_q);
    bound = bound_rational(params, deg_p, deg_q);
  } else {
    const std::size_t n = algebraic->degree();
    const std::size_t log_h = algebraic->log_height();
    cert.path = Path::algebraic;
    cert.hypotheses.n = n;
    cert.hypotheses.log_H = log_h;
    bound = bound_algebraic(params, n, log_h);
    cert.bound_kind = BoundKind::theorem1;
    if (log_h >= n) {
      const Integer refined = bound_refined(params, n, log_h);
      if (refined < bound) {
        bound = refined;
        cert.bound_kind = BoundKind::refined;
      }
    }
  }

  const std::size_t order = to_expansion_order(bound);
  cert.bound = order;
  cert.expansion_order = order;

  const Series f = expand_mahler(m, order);
  const Series approx =
      rational ? divide(Series::from_poly(rational->numerator, order), Series::from_poly(rational->denominator, order))
               : expand_branch(*algebraic, order);
  cert.nu = valuation(f - approx);
  cert.status = cert.nu.is_finite() ? Status::certified : Status::bound_violated;
  return cert;
}

}  // namespace mahlerzero
