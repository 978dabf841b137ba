#include "mahlerzero/modular_resultant.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <vector>

#include "mahlerzero/errors.hpp"

namespace mahlerzero {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 add_mod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

/// i-th prime below 2^62, descending. mpz_probab_prime_p is exact (BPSW)
/// in this range.
u64 nth_prime(std::size_t i) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  while (primes.size() <= i) {
    Integer candidate = primes.empty() ? Integer((u64{1} << 62) - 1) : Integer(primes.back() - 2);
    while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0) candidate -= 2;
    primes.push_back(candidate.get_ui());
  }
  return primes[i];
}

/// Integer coefficients of one y-coefficient: table[e][i] multiplies x^e z^i.
using IntTable = std::vector<std::vector<Integer>>;
using ModTable = std::vector<std::vector<u64>>;

Integer denominator_lcm(std::span<const BiPoly> coeffs) {
  Integer l = 1;
  for (const auto& c : coeffs)
    for (const auto& zp : c.y_coeffs())
      for (const auto& r : zp.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  return l;
}

std::vector<IntTable> to_integer_tables(std::span<const BiPoly> coeffs, const Integer& scale) {
  std::vector<IntTable> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    IntTable t;
    for (const auto& zp : c.y_coeffs()) {
      std::vector<Integer> row;
      row.reserve(zp.size());
      for (const auto& r : zp.coeffs()) {
        Rational scaled = r * scale;
        row.push_back(scaled.get_num());
      }
      t.push_back(std::move(row));
    }
    out.push_back(std::move(t));
  }
  return out;
}

Integer l1_norm(const std::vector<IntTable>& tables) {
  Integer sum = 0;
  for (const auto& t : tables)
    for (const auto& row : t)
      for (const auto& c : row) sum += abs(c);
  return sum;
}

ModTable reduce(const IntTable& t, u64 p) {
  ModTable out(t.size());
  for (std::size_t e = 0; e < t.size(); ++e) {
    out[e].reserve(t[e].size());
    for (const auto& c : t[e]) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
      out[e].push_back(r.get_ui());
    }
  }
  return out;
}

u64 horner(const std::vector<u64>& c, u64 at, u64 p) {
  u64 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add_mod(mul_mod(acc, at, p), *it, p);
  return acc;
}

u64 determinant_mod(std::vector<u64>& m, std::size_t n, u64 p) {
  u64 det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
      det = p - det;
      if (det == p) det = 0;
    }
    const u64 pk = m[k * n + k];
    det = mul_mod(det, pk, p);
    const u64 inv = inv_mod(pk, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const u64 f = mul_mod(m[i * n + k], inv, p);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) m[i * n + j] = sub_mod(m[i * n + j], mul_mod(f, m[k * n + j], p), p);
    }
  }
  return det;
}

/// Coefficients of the polynomial of degree <= values.size()-1 taking
/// values[i] at the point i.
std::vector<u64> interpolate(std::vector<u64> values, u64 p) {
  const std::size_t n = values.size();
  for (std::size_t j = 1; j < n; ++j) {
    const u64 inv_j = inv_mod(j, p);
    for (std::size_t i = n - 1; i >= j; --i) {
      values[i] = mul_mod(sub_mod(values[i], values[i - 1], p), inv_j, p);
      if (i == j) break;
    }
  }
  // Newton form -> monomial basis.
  std::vector<u64> poly(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    // poly = poly * (X - i) + values[i]
    for (std::size_t d = n - 1; d > 0; --d)
      poly[d] = sub_mod(poly[d - 1], mul_mod(poly[d], i % p, p), p);
    poly[0] = sub_mod(0, mul_mod(poly[0], i % p, p), p);
    poly[0] = add_mod(poly[0], values[i], p);
  }
  return poly;
}

struct Extent {
  std::size_t x = 0;
  std::size_t z = 0;
};

Extent max_extent(std::span<const BiPoly> coeffs) {
  Extent e;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    e.x = std::max(e.x, static_cast<std::size_t>(c.deg_y()));
    e.z = std::max(e.z, static_cast<std::size_t>(c.deg_z()));
  }
  return e;
}

std::span<const BiPoly> trimmed(std::span<const BiPoly> p) {
  std::size_t n = p.size();
  while (n > 0 && p[n - 1].is_zero()) --n;
  if (n == 0) throw PreconditionViolated("resultant of the zero polynomial");
  return p.first(n);
}

}  // namespace

BiPoly resultant_y_modular(std::span<const BiPoly> p_in, std::span<const BiPoly> q_in) {
  const auto p = trimmed(p_in);
  const auto q = trimmed(q_in);
  const std::size_t dp = p.size() - 1;
  const std::size_t dq = q.size() - 1;
  const std::size_t dim = dp + dq;
  if (dim == 0) throw PreconditionViolated("Sylvester matrix of two y-constant polynomials is empty");

  const Integer lp = denominator_lcm(p);
  const Integer lq = denominator_lcm(q);
  const auto pt = to_integer_tables(p, lp);
  const auto qt = to_integer_tables(q, lq);

  const Extent ep = max_extent(p);
  const Extent eq = max_extent(q);
  const std::size_t deg_x = dq * ep.x + dp * eq.x;
  const std::size_t deg_z = dq * ep.z + dp * eq.z;

  Integer hp, hq, bound;
  mpz_pow_ui(hp.get_mpz_t(), l1_norm(pt).get_mpz_t(), dq);
  mpz_pow_ui(hq.get_mpz_t(), l1_norm(qt).get_mpz_t(), dp);
  bound = 2 * hp * hq;

  std::vector<std::vector<Integer>> acc(deg_x + 1, std::vector<Integer>(deg_z + 1));
  Integer modulus = 1;

  std::vector<u64> entries_p(dp + 1), entries_q(dq + 1), mat(dim * dim);
  std::vector<std::vector<u64>> x_poly_p(dp + 1), x_poly_q(dq + 1);

  for (std::size_t prime_index = 0; modulus <= bound; ++prime_index) {
    const u64 prime = nth_prime(prime_index);
    std::vector<ModTable> pm, qm;
    for (const auto& t : pt) pm.push_back(reduce(t, prime));
    for (const auto& t : qt) qm.push_back(reduce(t, prime));

    // cx[a][e]: coefficient of x^e of D(a, x) mod prime.
    std::vector<std::vector<u64>> cx(deg_z + 1);
    std::vector<u64> column(deg_x + 1);
    for (std::size_t a = 0; a <= deg_z; ++a) {
      auto eval_z = [&](const ModTable& t, std::vector<u64>& out) {
        out.assign(t.size(), 0);
        for (std::size_t e = 0; e < t.size(); ++e) out[e] = horner(t[e], a, prime);
      };
      for (std::size_t j = 0; j <= dp; ++j) eval_z(pm[j], x_poly_p[j]);
      for (std::size_t j = 0; j <= dq; ++j) eval_z(qm[j], x_poly_q[j]);

      for (std::size_t b = 0; b <= deg_x; ++b) {
        for (std::size_t j = 0; j <= dp; ++j) entries_p[j] = horner(x_poly_p[j], b, prime);
        for (std::size_t j = 0; j <= dq; ++j) entries_q[j] = horner(x_poly_q[j], b, prime);
        std::fill(mat.begin(), mat.end(), 0);
        for (std::size_t r = 0; r < dq; ++r)
          for (std::size_t i = 0; i <= dp; ++i) mat[r * dim + r + i] = entries_p[i];
        for (std::size_t r = 0; r < dp; ++r)
          for (std::size_t i = 0; i <= dq; ++i) mat[(dq + r) * dim + r + i] = entries_q[i];
        column[b] = determinant_mod(mat, dim, prime);
      }
      cx[a] = interpolate(column, prime);
    }

    const u64 inv_modulus = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), prime), prime);
    std::vector<u64> values(deg_z + 1);
    for (std::size_t e = 0; e <= deg_x; ++e) {
      for (std::size_t a = 0; a <= deg_z; ++a) values[a] = cx[a][e];
      const auto cz = interpolate(values, prime);
      for (std::size_t i = 0; i <= deg_z; ++i) {
        Integer& c = acc[e][i];
        const u64 current = mpz_fdiv_ui(c.get_mpz_t(), prime);
        const u64 t = mul_mod(sub_mod(cz[i], current, prime), inv_modulus, prime);
        if (t != 0) c += modulus * Integer(static_cast<unsigned long>(t));
      }
    }
    modulus *= Integer(static_cast<unsigned long>(prime));
  }

  const Integer half = modulus / 2;
  Integer scale_p, scale_q;
  mpz_pow_ui(scale_p.get_mpz_t(), lp.get_mpz_t(), dq);
  mpz_pow_ui(scale_q.get_mpz_t(), lq.get_mpz_t(), dp);
  const Rational scale(scale_p * scale_q);

  std::vector<Poly> x_coeffs;
  x_coeffs.reserve(deg_x + 1);
  for (std::size_t e = 0; e <= deg_x; ++e) {
    std::vector<Rational> zc(deg_z + 1);
    for (std::size_t i = 0; i <= deg_z; ++i) {
      Integer c = acc[e][i];
      if (c > half) c -= modulus;
      zc[i] = Rational(c) / scale;
    }
    x_coeffs.emplace_back(std::move(zc));
  }
  return BiPoly(std::move(x_coeffs));
}

}  // namespace mahlerzero
