#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mahlerzero/errors.hpp"
#include "mahlerzero/poly.hpp"
#include "mahlerzero/rational.hpp"

namespace mahlerzero {

/// Dense row-major square matrix over an exact commutative ring R.
template <class R>
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_;
  std::vector<R> data_;
};

namespace detail {

template <class R>
std::size_t y_degree(std::span<const R> p) {
  std::size_t n = p.size();
  while (n > 0 && is_zero(p[n - 1])) --n;
  if (n == 0) throw PreconditionViolated("resultant of the zero polynomial");
  return n - 1;
}

}  // namespace detail

/// Sylvester matrix of P = sum p_i y^i and Q = sum q_i y^i (coefficients in
/// ascending order). Rows 0 .. deg Q - 1 hold p_0, p_1, ..., p_{deg P}
/// shifted one column per row; the remaining deg P rows hold q_0 .. q_{deg Q}
/// the same way.
template <class R>
Matrix<R> sylvester_matrix(std::span<const R> p, std::span<const R> q) {
  const std::size_t dp = detail::y_degree(p);
  const std::size_t dq = detail::y_degree(q);
  const std::size_t n = dp + dq;
  if (n == 0) throw PreconditionViolated("Sylvester matrix of two y-constant polynomials is empty");
  Matrix<R> m(n);
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t i = 0; i <= dp; ++i) m(r, r + i) = p[i];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t i = 0; i <= dq; ++i) m(dq + r, r + i) = q[i];
  return m;
}

/// Fraction-free (Bareiss) elimination; every division is exact in R.
template <class R>
R determinant_bareiss(Matrix<R> m) {
  const std::size_t n = m.size();
  if (n == 0) throw InternalError("determinant of an empty matrix");
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return R();
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        if (k > 0) v = divexact(v, m(k - 1, k - 1));
        m(i, j) = std::move(v);
      }
    }
  }
  R det = m(n - 1, n - 1);
  return negate ? R(-det) : det;
}

/// res_y(P, Q) = det of sylvester_matrix(P, Q).
template <class R>
R resultant_y(std::span<const R> p, std::span<const R> q) {
  return determinant_bareiss(sylvester_matrix(p, q));
}

/// res_y for P, Q in Q[z][y]; the result lies in Q[z].
inline Poly resultant_y(const BiPoly& p, const BiPoly& q) {
  return resultant_y<Poly>(p.y_coeffs(), q.y_coeffs());
}

}  // namespace mahlerzero
