#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace pretzel {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

/// Exponent vector of a monomial c * M^m * L^l. Exponents may be negative.
struct ExpVec {
  std::int64_t m = 0;
  std::int64_t l = 0;

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
};

/// Canonical term order: lexicographic by (l, m), ascending.
struct TermOrder {
  bool operator()(const ExpVec& a, const ExpVec& b) const noexcept {
    return a.l != b.l ? a.l < b.l : a.m < b.m;
  }
};

/// Sparse bivariate Laurent polynomial in (M, L) over the rationals.
/// Invariant: no stored coefficient is zero; the zero polynomial is the
/// empty map. Equal term maps iff equal polynomials.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Rational, TermOrder>;

  LaurentPoly() = default;
  LaurentPoly(long value) {  // NOLINT: implicit for readable table code
    if (value != 0) terms_[ExpVec{}] = value;
  }

  static LaurentPoly monomial(Rational coeff, std::int64_t em, std::int64_t el) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_[ExpVec{em, el}] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of M^em L^el (zero if absent).
  Rational coeff(std::int64_t em, std::int64_t el) const;

  /// Highest term in the canonical (l, m) order. Precondition: nonzero.
  const std::pair<const ExpVec, Rational>& leading_term() const;

  /// Sum of all coefficients, i.e. the value at M = L = 1.
  Rational eval_at_one() const;

  void add_term(const ExpVec& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs) { *this = *this * rhs; return *this; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  TermMap terms_;
};

/// Shift every exponent by (em, el) and scale every coefficient.
/// Precondition: coeff != 0 (a monomial is a unit of the Laurent ring).
LaurentPoly monomial_mul(const LaurentPoly& p, const Rational& coeff,
                         std::int64_t em, std::int64_t el);

LaurentPoly pow(const LaurentPoly& p, unsigned k);

/// Monomial image of one variable under a substitution. Target exponents are
/// stored doubled so half-integer maps like M -> sqrt(M) stay integral.
struct MonomialImage {
  int sign = +1;
  std::int64_t m2 = 0;  // doubled M-exponent of the image
  std::int64_t l2 = 0;  // doubled L-exponent of the image
};

/// Monomial change of variables with signs, an overall unit multiplier, and
/// an optional i-power rule: an extra (-1)^(eM/2) per term, encoding
/// M -> i * (monomial)^(1/2) without complex coefficients. The rule is only
/// valid when every M-exponent of the input is even.
struct GeneralSubst {
  MonomialImage image_m{+1, 2, 0};  // identity M -> M
  MonomialImage image_l{+1, 0, 2};  // identity L -> L
  int unit_sign = +1;
  ExpVec unit_exp{};
  bool i_power_rule = false;

  /// L -> L * M^s, M fixed.
  static GeneralSubst shear(std::int64_t s) {
    GeneralSubst su;
    su.image_l = MonomialImage{+1, checked_mul(2, s), 2};
    return su;
  }
};

/// Apply a substitution term by term. Throws std::domain_error when a
/// half-exponent map produces a non-integral exponent or when the i-power
/// rule meets an odd M-exponent.
LaurentPoly substitute(const LaurentPoly& p, const GeneralSubst& s);

/// Exact division in the Laurent ring: returns q with p = q * d, or nullopt
/// when d does not divide p. Throws on d = 0.
std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// True when every M-exponent of p is even.
bool has_even_m_exponents(const LaurentPoly& p);

/// Convenience monomial with an integer coefficient.
inline LaurentPoly term(long coeff, std::int64_t em, std::int64_t el) {
  return LaurentPoly::monomial(Rational(coeff), em, el);
}

/// Text rendering: canonical (l, m) term order, explicit signs, caret
/// exponents ("M^-3" for negative powers).
std::string to_string(const LaurentPoly& p);

}  // namespace pretzel
