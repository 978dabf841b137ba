#pragma once

#include <span>

#include "mahlerzero/poly.hpp"

namespace mahlerzero {

/// res_y(P, Q) where the y-coefficients of P and Q lie in Q[z, x], each
/// stored as a BiPoly with x in the outer slot. Returns the same polynomial
/// as resultant_y<BiPoly>, computed by evaluation at integer points modulo
/// word-size primes, interpolation, and Chinese remaindering. Degree bounds
/// come from the Leibniz expansion of the Sylvester determinant and the
/// number of primes from a Hadamard-type coefficient bound, so the result
/// is exact (no probabilistic step).
BiPoly resultant_y_modular(std::span<const BiPoly> p, std::span<const BiPoly> q);

}  // namespace mahlerzero
