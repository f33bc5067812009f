#pragma once

#include <span>
#include <string>

#include "pretzel/laurent.hpp"

namespace pretzel {

/// Formal quotient of two Laurent polynomials. Not auto-reduced; equality is
/// by cross-multiplication. Reduction happens only through reduce_by_basis
/// against a declared factor basis.
class RationalFn {
 public:
  RationalFn() : num_(0), den_(1) {}
  RationalFn(LaurentPoly numerator)  // NOLINT: polynomials embed implicitly
      : num_(std::move(numerator)), den_(1) {}
  RationalFn(LaurentPoly numerator, LaurentPoly denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFn operator-() const { return RationalFn(-num_, den_); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }

  /// Cross-multiplied equality: a/b = c/d iff a*d = c*b.
  friend bool rf_equal(const RationalFn& a, const RationalFn& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

RationalFn reciprocal(const RationalFn& r);
RationalFn rf_pow(const RationalFn& r, unsigned k);

/// Repeatedly divide numerator and denominator by any basis factor dividing
/// both, then fold a purely monomial denominator into the numerator
/// (monomials are units of the Laurent ring).
RationalFn reduce_by_basis(const RationalFn& r, std::span<const LaurentPoly> basis);

std::string to_string(const RationalFn& r);

}  // namespace pretzel
