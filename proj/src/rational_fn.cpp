#include "pretzel/rational_fn.hpp"

namespace pretzel {

RationalFn reciprocal(const RationalFn& r) {
  if (r.num().is_zero()) throw std::invalid_argument("reciprocal of zero");
  return RationalFn(r.den(), r.num());
}

RationalFn rf_pow(const RationalFn& r, unsigned k) {
  return RationalFn(pow(r.num(), k), pow(r.den(), k));
}

RationalFn reduce_by_basis(const RationalFn& r, std::span<const LaurentPoly> basis) {
  for (const auto& f : basis) {
    if (f.is_zero() || f.is_monomial()) {
      throw std::invalid_argument("reduce_by_basis: basis factors must be non-unit");
    }
  }
  LaurentPoly num = r.num();
  LaurentPoly den = r.den();
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& f : basis) {
      while (true) {
        auto qn = exact_div(num, f);
        if (!qn) break;
        auto qd = exact_div(den, f);
        if (!qd) break;
        num = std::move(*qn);
        den = std::move(*qd);
        progress = true;
      }
    }
  }
  if (den.is_monomial() && !den.is_one()) {
    num = *exact_div(num, den);
    den = 1;
  }
  return RationalFn(std::move(num), std::move(den));
}

std::string to_string(const RationalFn& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ") / (" + to_string(r.den()) + ")";
}

}  // namespace pretzel
