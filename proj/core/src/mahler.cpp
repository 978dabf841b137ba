#include "mahlerzero/mahler.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mahlerzero/errors.hpp"

namespace mahlerzero {

namespace {

std::string inconsistency_message(std::size_t equation, std::optional<std::size_t> coefficient) {
  std::string msg = "InconsistentSeeds";
  if (coefficient) msg += " at z^" + std::to_string(*coefficient);
  msg += ": coefficient equation of z^" + std::to_string(equation) + " fails";
  return msg;
}

}  // namespace

InconsistentSeeds::InconsistentSeeds(std::size_t equation_index,
                                     std::optional<std::size_t> coefficient_index)
    : ExpansionError(inconsistency_message(equation_index, coefficient_index)),
      equation_index_(equation_index),
      coefficient_index_(coefficient_index) {}

MahlerFunction::MahlerFunction(std::size_t k, std::vector<Poly> coeffs, std::vector<Rational> seeds,
                               bool irrational_asserted)
    : k_(k), coeffs_(std::move(coeffs)), seeds_(std::move(seeds)), irrational_asserted_(irrational_asserted) {
  if (k_ < 2) throw PreconditionViolated("Mahler radix k must be >= 2");
  if (coeffs_.size() < 2) throw PreconditionViolated("Mahler equation needs d >= 1");
  if (coeffs_.front().is_zero()) throw PreconditionViolated("a_0 must be nonzero");
  if (coeffs_.back().is_zero()) throw PreconditionViolated("a_d must be nonzero");
  const std::size_t need = seed_threshold();
  if (seeds_.size() < need + 1)
    throw InsufficientSeeds("need seeds f_0 .. f_" + std::to_string(need) + ", got " +
                            std::to_string(seeds_.size()));
}

std::size_t MahlerFunction::height() const {
  long h = 0;
  for (const auto& a : coeffs_) h = std::max(h, a.degree());
  return static_cast<std::size_t>(h);
}

std::size_t MahlerFunction::seed_threshold() const {
  const std::size_t v0 = coeffs_.front().order();
  return (v0 * k_ + (k_ - 2)) / (k_ - 1);
}

MahlerFunction MahlerFunction::with_irrational_asserted(bool asserted) const {
  MahlerFunction copy = *this;
  copy.irrational_asserted_ = asserted;
  return copy;
}

Series expand_mahler(const MahlerFunction& m, std::size_t n) {
  const auto& a = m.coeffs();
  const std::size_t k = m.k();
  const std::size_t v0 = a.front().order();
  const Rational& pivot = a.front().coeff(v0);
  const std::size_t seeded = m.seeds().size();  // f_0 .. f_{seeded-1} are given
  const std::size_t top = std::max(n, seeded - 1);

  std::vector<Rational> f(top + 1);
  std::copy(m.seeds().begin(), m.seeds().end(), f.begin());

  // k^i for every term; terms whose stride exceeds the last equation index
  // only touch f_0.
  std::vector<std::size_t> stride(a.size(), 1);
  for (std::size_t i = 1; i < a.size(); ++i) stride[i] = stride[i - 1] * k;

  // Coefficient of z^e in sum_i a_i(z) f(z^{k^i}) using the current f.
  auto equation = [&](std::size_t e) {
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Poly& ai = a[i];
      const std::size_t hi = std::min(e, ai.size() ? ai.size() - 1 : 0);
      for (std::size_t j = 0; j <= hi && j < ai.size(); ++j) {
        const Rational& c = ai.coeff(j);
        if (is_zero(c)) continue;
        const std::size_t t = e - j;
        if (t % stride[i] != 0) continue;
        acc += c * f[t / stride[i]];
      }
    }
    return acc;
  };

  for (std::size_t e = 0; e <= top + v0; ++e) {
    const bool has_unknown = e >= v0;
    const std::size_t target = e - v0;
    if (has_unknown && target >= seeded) {
      // f_target is the largest index in this equation and only a_0
      // reaches it; it is still zero in f.
      f[target] = -equation(e) / pivot;
    } else if (!is_zero(equation(e))) {
      throw InconsistentSeeds(e, has_unknown ? std::optional<std::size_t>(target) : std::nullopt);
    }
  }
  return Series(std::move(f), n);
}

EquationCheck verify_equation(const MahlerFunction& m, const Series& s) {
  std::size_t stride = 1;
  Series total(s.trunc_order());
  for (const auto& a : m.coeffs()) {
    total = total + scale_by_poly(substitute_power(s, stride).truncated(s.trunc_order()), a);
    stride *= m.k();
  }
  const Valuation v = valuation(total);
  if (v.is_finite()) return {false, v.value()};
  return {true, std::nullopt};
}

}  // namespace mahlerzero
