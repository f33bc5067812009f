#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pretzel/tables.hpp"

using namespace pretzel;
using namespace pretzel::tables;

namespace {
const LaurentPoly one = 1;
LaurentPoly lm10() { return one + term(1, 10, 1); }
LaurentPoly quartic_product() {
  // L^4 (-1+M)^4 M^36 (1+M)^4 (1+LM^10)^4
  return term(1, 36, 4) * pow(term(-1, 0, 0) + term(1, 1, 0), 4) *
         pow(one + term(1, 1, 0), 4) * pow(lm10(), 4);
}
}  // namespace

TEST_CASE("c coefficients") {
  CHECK(coeff_c(4) == term(1, 4, 0));
  CHECK(coeff_c(0) == quartic_product());
  CHECK(coeff_c(3).eval_at_one() == 0);
  for (int k = 0; k <= 4; ++k) CHECK(has_even_m_exponents(coeff_c(k)));
  CHECK_THROWS_AS(coeff_c(5), std::out_of_range);
  CHECK_THROWS_AS(coeff_c(-1), std::out_of_range);
}

TEST_CASE("gamma coefficients are palindromic") {
  CHECK(coeff_gamma(0) == coeff_gamma(4));
  CHECK(coeff_gamma(1) == coeff_gamma(3));
  CHECK(coeff_gamma(4) == quartic_product());
}

TEST_CASE("gamma_k b^k = c_k ties the two appendix tables together") {
  for (unsigned k = 0; k <= 4; ++k) {
    CHECK(rf_equal(RationalFn(coeff_gamma(static_cast<int>(k))) * rf_pow(b(), k),
                   RationalFn(coeff_c(static_cast<int>(k)))));
  }
}

TEST_CASE("initial conditions") {
  // P_0 = (-1+LM^12)(1+LM^12)^2 / (1+LM^10)^3
  const LaurentPoly lm12m = term(-1, 0, 0) + term(1, 12, 1);
  const LaurentPoly lm12p = one + term(1, 12, 1);
  CHECK(rf_equal(initial_P(0), RationalFn(lm12m * pow(lm12p, 2), pow(lm10(), 3))));

  // Q_-1 = -M^12 (1+LM^14)^2 / (L(-1+M)(1+M))
  CHECK(rf_equal(initial_Q(-1),
                 RationalFn(term(-1, 12, 0) * pow(one + term(1, 14, 1), 2),
                            term(1, 0, 1) * (term(-1, 0, 0) + term(1, 1, 0)) *
                                (one + term(1, 1, 0)))));

  CHECK(initial_P(2).is_polynomial());
  CHECK(initial_P(2).num().term_count() == 12);
  CHECK(has_even_m_exponents(initial_P(2).num()));
  CHECK(initial_P(3).is_polynomial());
  CHECK(initial_Q(-2).is_polynomial());
  CHECK(initial_Q(-3).is_polynomial());

  CHECK_THROWS_AS(initial_P(4), std::out_of_range);
  CHECK_THROWS_AS(initial_Q(1), std::out_of_range);
  CHECK_THROWS_AS(initial_Q(-4), std::out_of_range);
}

TEST_CASE("eta") {
  CHECK(eta(2) == term(1, 22, 0));
  CHECK(eta(3) == LaurentPoly(1));
  CHECK(eta(17) == LaurentPoly(1));
  CHECK_THROWS_AS(eta(1), std::domain_error);
}

TEST_CASE("nongeom") {
  CHECK(nongeom(3) == term(1, 0, 0) + term(-1, 24, 1));
  CHECK(!nongeom(4).has_value());
  CHECK(!nongeom(0).has_value());
  CHECK(nongeom(-3) == term(1, 0, 1) + term(-1, 0, 0));  // L - 1
  CHECK(nongeom(-6) == term(1, 0, 1) + term(-1, 12, 0));
}

TEST_CASE("epsilon follows eq. b including the n=-2 special case") {
  CHECK(rf_equal(epsilon(2), RationalFn(one)));
  CHECK(rf_equal(epsilon(-2), c_unit() * RationalFn(term(1, -28, 0))));
  CHECK(rf_equal(epsilon(-3), c_unit()));  // -4(3+n)(2+3n) vanishes at n=-3
  CHECK(rf_equal(epsilon(-4), c_unit() * RationalFn(term(1, -40, 0))));
  CHECK_THROWS_AS(epsilon(0), std::domain_error);
}
