#pragma once

#include <optional>
#include <span>

#include "pretzel/rational_fn.hpp"

namespace pretzel::tables {

/// Recursion coefficient c_k, k = 0..4. c_4 = M^4.
const LaurentPoly& coeff_c(int k);

/// Palindromic coefficient gamma_k, k = 0..4 (gamma_0 = gamma_4,
/// gamma_1 = gamma_3, and gamma_k * b^k = c_k).
const LaurentPoly& coeff_gamma(int k);

/// Initial condition P_i for i = 0..3. P_2 and P_3 are polynomials.
const RationalFn& initial_P(int i);

/// Initial condition Q_i for i = 0, -1, -2, -3. Q_-2 and Q_-3 are polynomials.
const RationalFn& initial_Q(int i);

/// b = 1 / (L M^8 (1 - M^2)(1 + L M^10)).
const RationalFn& b();

/// c = L^3 M^12 (1 - M^2)^3 / (1 + L M^10)^3.
const RationalFn& c_unit();

/// epsilon_n: 1 for n > 1, c M^{-4(3+n)(2+3n)} for n < -2, c M^-28 at n = -2.
RationalFn epsilon(std::int64_t n);

/// eta_n of the duality theorem: M^22 at n = 2, 1 for n > 2.
LaurentPoly eta(std::int64_t n);

/// Non-geometric factor of A_n: 1 - L M^{4(n+3)} for n >= 3 divisible by 3,
/// L - M^{-4(n+3)} for n <= -3 divisible by 3, absent otherwise.
std::optional<LaurentPoly> nongeom(std::int64_t n);

/// The fixed factor basis every denominator of the family factors over:
/// {M, L, 1-M, 1+M, 1+LM^10, 1-LM^12, 1+LM^12}. Monomial entries are
/// excluded from reduce_by_basis calls (units fold automatically).
std::span<const LaurentPoly> family_basis();

}  // namespace pretzel::tables
