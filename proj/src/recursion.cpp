#include "pretzel/recursion.hpp"

namespace pretzel {

namespace {

const LaurentPoly& p_clearing_factor() {
  // (1 + LM^10)^3
  static const LaurentPoly f = pow(term(1, 0, 0) + term(1, 10, 1), 3);
  return f;
}

const LaurentPoly& q_clearing_factor() {
  // L^3 (-1+M)^3 (1+M)^3
  static const LaurentPoly f = term(1, 0, 3) *
                               pow(term(-1, 0, 0) + term(1, 1, 0), 3) *
                               pow(term(1, 0, 0) + term(1, 1, 0), 3);
  return f;
}

// Scaled seed: value * factor must reduce to a Laurent polynomial.
LaurentPoly cleared_seed(const RationalFn& value, const LaurentPoly& factor) {
  RationalFn scaled = value * RationalFn(factor);
  scaled = reduce_by_basis(scaled, tables::family_basis());
  if (!scaled.is_polynomial()) {
    throw std::logic_error("denominator did not clear for a recursion seed");
  }
  return scaled.num();
}

}  // namespace

const char* torus_knot_name(std::int64_t n) {
  switch (n) {
    case -1: return "5_1";
    case 0: return "8_19";
    case 1: return "10_124";
    default: throw std::domain_error("not a torus-knot index");
  }
}

const LaurentPoly& FamilyEngine::scaled_P(std::int64_t n) const {
  std::scoped_lock lock(mutex_);
  auto it = p_cache_.find(n);
  if (it != p_cache_.end()) return it->second;
  if (n <= 3) {
    auto [pos, ignore] =
        p_cache_.emplace(n, cleared_seed(tables::initial_P(static_cast<int>(n)),
                                         p_clearing_factor()));
    return pos->second;
  }
  // c_4 P~_n = -(c_0 P~_{n-4} + ... + c_3 P~_{n-1}); c_4 = M^4 is a unit.
  LaurentPoly acc;
  for (int k = 0; k < 4; ++k) {
    acc += tables::coeff_c(k) * scaled_P(n - 4 + k);
  }
  auto [pos, ignore] = p_cache_.emplace(n, monomial_mul(acc, -1, -4, 0));
  return pos->second;
}

const LaurentPoly& FamilyEngine::scaled_Q(std::int64_t n) const {
  std::scoped_lock lock(mutex_);
  auto it = q_cache_.find(n);
  if (it != q_cache_.end()) return it->second;
  if (n >= -3) {
    auto [pos, ignore] =
        q_cache_.emplace(n, cleared_seed(tables::initial_Q(static_cast<int>(n)),
                                         q_clearing_factor()));
    return pos->second;
  }
  // sum_{k=0}^4 c_k Q~_{m-k} = 0 with m = n+4, solved for the bottom index.
  LaurentPoly acc;
  for (int k = 0; k < 4; ++k) {
    acc += tables::coeff_c(k) * scaled_Q(n + 4 - k);
  }
  auto [pos, ignore] = q_cache_.emplace(n, monomial_mul(acc, -1, -4, 0));
  return pos->second;
}

FamilyMember FamilyEngine::compute_P(std::int64_t n) const {
  if (n < 0) throw std::domain_error("compute_P: requires n >= 0");
  FamilyMember member;
  member.n = n;
  member.form = Form::P;
  member.knot_class = classify(n);
  if (n <= 1) {
    member.value = reduce_by_basis(tables::initial_P(static_cast<int>(n)),
                                   tables::family_basis());
    member.is_polynomial = member.value.is_polynomial();
    return member;
  }
  auto quotient = exact_div(scaled_P(n), p_clearing_factor());
  if (!quotient) throw std::logic_error("compute_P: denominator did not clear");
  member.value = RationalFn(std::move(*quotient));
  member.is_polynomial = true;
  return member;
}

FamilyMember FamilyEngine::compute_Q(std::int64_t n) const {
  if (n > 0) throw std::domain_error("compute_Q: requires n <= 0");
  FamilyMember member;
  member.n = n;
  member.form = Form::Q;
  member.knot_class = classify(n);
  if (n >= -1) {
    member.value = reduce_by_basis(tables::initial_Q(static_cast<int>(n)),
                                   tables::family_basis());
    member.is_polynomial = member.value.is_polynomial();
    return member;
  }
  auto quotient = exact_div(scaled_Q(n), q_clearing_factor());
  if (!quotient) throw std::logic_error("compute_Q: denominator did not clear");
  member.value = RationalFn(std::move(*quotient));
  member.is_polynomial = true;
  return member;
}

FamilyMember FamilyEngine::compute_A(std::int64_t n, bool generic_n2) const {
  if (n >= -1 && n <= 1) {
    throw std::domain_error(std::string("torus knot (") + torus_knot_name(n) +
                            "): A-form not defined by the family tables");
  }
  FamilyMember member;
  member.n = n;
  member.form = Form::A;
  member.knot_class = KnotClass::hyperbolic;
  member.is_polynomial = true;
  if (n >= 2) {
    member.value = RationalFn(
        substitute(compute_P(n).value.num(), GeneralSubst::shear(4 * n)));
    return member;
  }
  const LaurentPoly q = compute_Q(n).value.num();
  if (n <= -3) {
    const std::int64_t unit =
        checked_mul(4, 3 * n * n + 11 * n + 4);
    member.value = RationalFn(
        monomial_mul(substitute(q, GeneralSubst::shear(4 * n)), 1, unit, 0));
    return member;
  }
  // n = -2: both units sit on the same shear L -> LM^-8.
  const std::int64_t unit = generic_n2 ? -24 : 20;
  member.value =
      RationalFn(monomial_mul(substitute(q, GeneralSubst::shear(-8)), 1, unit, 0));
  return member;
}

FamilyMember FamilyEngine::compute_R(std::int64_t n) const {
  FamilyMember member;
  member.n = n;
  member.form = Form::R;
  member.knot_class = classify(n);
  const unsigned abs_n = static_cast<unsigned>(n < 0 ? -n : n);
  const RationalFn b_pow = rf_pow(tables::b(), abs_n);
  RationalFn value;
  if (n >= 0) {
    value = compute_P(n).value * b_pow;
  }
  if (n <= 0) {
    RationalFn q_branch = compute_Q(n).value * b_pow * tables::c_unit() *
                          RationalFn(term(1, -8, 0));
    if (n == 0 && !rf_equal(value, q_branch)) {
      throw std::logic_error("compute_R: P- and Q-branches disagree at n = 0");
    }
    value = std::move(q_branch);
  }
  member.value = reduce_by_basis(value, tables::family_basis());
  member.is_polynomial = member.value.is_polynomial();
  return member;
}

Report FamilyEngine::verify_forward(std::int64_t lo, std::int64_t hi) const {
  if (lo < 0) throw std::domain_error("verify_forward: range must satisfy n >= 0");
  Report report;
  for (std::int64_t n = lo; n <= hi; ++n) {
    // sum_k c_k P_{n+k} = 0, checked on the cleared sequence.
    LaurentPoly acc_p;
    for (int k = 0; k <= 4; ++k) acc_p += tables::coeff_c(k) * scaled_P(n + k);
    report.push_back({n, acc_p.is_zero(), "recP"});

    RationalFn acc_r;
    for (int k = 0; k <= 4; ++k) {
      acc_r = acc_r + RationalFn(tables::coeff_gamma(k)) * compute_R(n + k).value;
    }
    report.push_back({n, acc_r.is_zero(), "recR"});
  }
  return report;
}

RationalFn FamilyEngine::backward_R(std::int64_t n) const {
  std::scoped_lock lock(mutex_);
  auto it = r_back_cache_.find(n);
  if (it != r_back_cache_.end()) return it->second;
  RationalFn value;
  if (n >= 0 && n <= 3) {
    value = compute_R(n).value;
  } else if (n < 0) {
    // gamma_0 R_n = -(gamma_1 R_{n+1} + ... + gamma_4 R_{n+4})
    RationalFn acc;
    for (int k = 1; k <= 4; ++k) {
      acc = acc + RationalFn(tables::coeff_gamma(k)) * backward_R(n + k);
    }
    value = reduce_by_basis(-acc * RationalFn(LaurentPoly(1), tables::coeff_gamma(0)),
                            tables::family_basis());
  } else {
    throw std::domain_error("backward_R: seeded only for n <= 3");
  }
  r_back_cache_.emplace(n, value);
  return value;
}

Report FamilyEngine::verify_backward(std::int64_t lo, std::int64_t hi) const {
  if (hi > 0) throw std::domain_error("verify_backward: range must satisfy n <= 0");
  Report report;
  for (std::int64_t n = hi; n >= lo; --n) {
    const RationalFn lhs = backward_R(n);
    const RationalFn rhs = compute_Q(n).value * rf_pow(tables::b(), static_cast<unsigned>(-n)) *
                           tables::c_unit() * RationalFn(term(1, -8, 0));
    report.push_back({n, rf_equal(lhs, rhs), "backward"});
  }
  return report;
}

}  // namespace pretzel
