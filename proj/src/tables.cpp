#include "pretzel/tables.hpp"

#include <array>

namespace pretzel::tables {

namespace {

// Shorthand for coeff * M^em * L^el, keeping the transcriptions below close
// to the published factored displays.
LaurentPoly t(long coeff, std::int64_t em, std::int64_t el) {
  return term(coeff, em, el);
}

// The degree-3 bracket shared (up to sign) by c_3, c_1 and gamma_3:
// -1 - M^4 - 2LM^12 - LM^14 + LM^16 - L^2M^20 + L^2M^22 + 2L^2M^24
// + L^3M^32 + L^3M^36
LaurentPoly bracket13() {
  return t(-1, 0, 0) + t(-1, 4, 0) + t(-2, 12, 1) + t(-1, 14, 1) + t(1, 16, 1) +
         t(-1, 20, 2) + t(1, 22, 2) + t(2, 24, 2) + t(1, 32, 3) + t(1, 36, 3);
}

// The degree-5 bracket shared by c_2 and gamma_2:
// -1 - 2LM^10 - 3LM^12 + 2LM^14 - L^2M^16 + 2L^2M^18 - 4L^2M^20 - 2L^2M^22
// + 3L^2M^24 - 3L^3M^28 + 2L^3M^30 + 4L^3M^32 - 2L^3M^34 + L^3M^36
// - 2L^4M^38 + 3L^4M^40 + 2L^4M^42 + L^5M^52
LaurentPoly bracket2() {
  return t(-1, 0, 0) + t(-2, 10, 1) + t(-3, 12, 1) + t(2, 14, 1) + t(-1, 16, 2) +
         t(2, 18, 2) + t(-4, 20, 2) + t(-2, 22, 2) + t(3, 24, 2) + t(-3, 28, 3) +
         t(2, 30, 3) + t(4, 32, 3) + t(-2, 34, 3) + t(1, 36, 3) + t(-2, 38, 4) +
         t(3, 40, 4) + t(2, 42, 4) + t(1, 52, 5);
}

LaurentPoly lm12_minus() { return t(-1, 0, 0) + t(1, 12, 1); }  // -1 + LM^12
LaurentPoly lm12_plus() { return t(1, 0, 0) + t(1, 12, 1); }    // 1 + LM^12
LaurentPoly lm10_plus() { return t(1, 0, 0) + t(1, 10, 1); }    // 1 + LM^10
LaurentPoly m_minus() { return t(-1, 0, 0) + t(1, 1, 0); }      // -1 + M
LaurentPoly m_plus() { return t(1, 0, 0) + t(1, 1, 0); }        // 1 + M

std::array<LaurentPoly, 5> make_c() {
  std::array<LaurentPoly, 5> c;
  c[4] = t(1, 4, 0);
  c[3] = -bracket13();
  c[2] = lm12_minus() * bracket2();
  c[1] = t(-1, 16, 2) * pow(m_minus(), 2) * pow(m_plus(), 2) * pow(lm10_plus(), 2) *
         bracket13();
  c[0] = t(1, 36, 4) * pow(m_minus(), 4) * pow(m_plus(), 4) * pow(lm10_plus(), 4);
  return c;
}

std::array<LaurentPoly, 5> make_gamma() {
  std::array<LaurentPoly, 5> g;
  g[4] = t(1, 36, 4) * pow(m_minus(), 4) * pow(m_plus(), 4) * pow(lm10_plus(), 4);
  g[3] = t(1, 24, 3) * pow(m_minus(), 3) * pow(m_plus(), 3) * pow(lm10_plus(), 3) *
         bracket13();
  g[2] = t(1, 16, 2) * pow(m_minus(), 2) * pow(m_plus(), 2) * pow(lm10_plus(), 2) *
         lm12_minus() * bracket2();
  g[1] = g[3];
  g[0] = g[4];
  return g;
}

LaurentPoly p2_display() {
  return t(-1, 0, 0) + t(1, 8, 1) + t(-2, 10, 1) + t(1, 12, 1) + t(2, 20, 2) +
         t(1, 22, 2) + t(-1, 40, 4) + t(-2, 42, 4) + t(-1, 50, 5) + t(2, 52, 5) +
         t(-1, 54, 5) + t(1, 62, 6);
}

LaurentPoly p3_bracket() {
  return t(-1, 0, 0) + t(1, 4, 1) + t(-1, 6, 1) + t(2, 8, 1) + t(-5, 10, 1) +
         t(1, 12, 1) + t(5, 16, 2) + t(-4, 18, 2) + t(1, 22, 2) + t(1, 26, 3) +
         t(3, 30, 3) + t(2, 32, 3) + t(-2, 36, 4) + t(-3, 38, 4) + t(3, 40, 4) +
         t(2, 42, 4) + t(-2, 46, 5) + t(-3, 48, 5) + t(-1, 52, 5) + t(-1, 56, 6) +
         t(4, 60, 6) + t(-5, 62, 6) + t(-1, 66, 7) + t(5, 68, 7) + t(-2, 70, 7) +
         t(1, 72, 7) + t(-1, 74, 7) + t(1, 78, 8);
}

LaurentPoly qm2_bracket() {
  return t(1, 0, 0) + t(-1, 8, 1) + t(2, 10, 1) + t(2, 12, 1) + t(-1, 16, 1) +
         t(1, 18, 1) + t(1, 20, 2) + t(-1, 22, 2) + t(2, 26, 2) + t(2, 28, 2) +
         t(-1, 30, 2) + t(1, 38, 3);
}

LaurentPoly qm3_bracket() {
  return t(1, 0, 0) + t(1, 10, 1) + t(5, 12, 1) + t(-1, 14, 1) + t(-2, 16, 1) +
         t(2, 18, 1) + t(-1, 20, 1) + t(2, 20, 2) + t(1, 22, 1) + t(4, 22, 2) +
         t(3, 26, 2) + t(-3, 28, 2) + t(-1, 28, 3) + t(5, 30, 3) + t(5, 32, 2) +
         t(-1, 34, 2) + t(-3, 34, 3) + t(3, 36, 3) + t(4, 40, 3) + t(1, 40, 4) +
         t(2, 42, 3) + t(-1, 42, 4) + t(2, 44, 4) + t(-2, 46, 4) + t(-1, 48, 4) +
         t(5, 50, 4) + t(1, 52, 4) + t(1, 62, 5);
}

std::array<RationalFn, 4> make_P() {
  std::array<RationalFn, 4> p;
  p[0] = RationalFn(lm12_minus() * pow(lm12_plus(), 2), pow(lm10_plus(), 3));
  const LaurentPoly lm11_minus = t(-1, 0, 0) + t(1, 11, 1);
  const LaurentPoly lm11_plus = t(1, 0, 0) + t(1, 11, 1);
  p[1] = RationalFn(pow(lm11_minus, 2) * pow(lm11_plus, 2), lm10_plus());
  p[2] = RationalFn(p2_display());
  p[3] = RationalFn(lm12_minus() * p3_bracket());
  return p;
}

std::array<RationalFn, 4> make_Q() {
  std::array<RationalFn, 4> q;  // index i holds Q_{-i}
  q[0] = RationalFn(-(lm12_minus() * pow(lm12_plus(), 2)),
                    t(1, 4, 3) * pow(m_minus(), 3) * pow(m_plus(), 3));
  const LaurentPoly lm14_plus = t(1, 0, 0) + t(1, 14, 1);
  q[1] = RationalFn(t(-1, 12, 0) * pow(lm14_plus, 2),
                    t(1, 0, 1) * m_minus() * m_plus());
  q[2] = RationalFn(t(1, 20, 0) * qm2_bracket());
  q[3] = RationalFn(t(1, 16, 0) * lm12_minus() * qm3_bracket());
  return q;
}

}  // namespace

const LaurentPoly& coeff_c(int k) {
  static const std::array<LaurentPoly, 5> c = make_c();
  if (k < 0 || k > 4) throw std::out_of_range("coeff_c: k must be 0..4");
  return c[static_cast<std::size_t>(k)];
}

const LaurentPoly& coeff_gamma(int k) {
  static const std::array<LaurentPoly, 5> g = make_gamma();
  if (k < 0 || k > 4) throw std::out_of_range("coeff_gamma: k must be 0..4");
  return g[static_cast<std::size_t>(k)];
}

const RationalFn& initial_P(int i) {
  static const std::array<RationalFn, 4> p = make_P();
  if (i < 0 || i > 3) throw std::out_of_range("initial_P: i must be 0..3");
  return p[static_cast<std::size_t>(i)];
}

const RationalFn& initial_Q(int i) {
  static const std::array<RationalFn, 4> q = make_Q();
  if (i > 0 || i < -3) throw std::out_of_range("initial_Q: i must be 0..-3");
  return q[static_cast<std::size_t>(-i)];
}

const RationalFn& b() {
  // 1 / (L M^8 (1 - M^2)(1 + L M^10))
  static const RationalFn value(
      LaurentPoly(1),
      t(1, 8, 1) * (t(1, 0, 0) + t(-1, 2, 0)) * lm10_plus());
  return value;
}

const RationalFn& c_unit() {
  // L^3 M^12 (1 - M^2)^3 / (1 + L M^10)^3
  static const RationalFn value(
      t(1, 12, 3) * pow(t(1, 0, 0) + t(-1, 2, 0), 3), pow(lm10_plus(), 3));
  return value;
}

RationalFn epsilon(std::int64_t n) {
  if (n > 1) return RationalFn(LaurentPoly(1));
  if (n == -2) return c_unit() * RationalFn(t(1, -28, 0));
  if (n < -2) {
    const std::int64_t e = checked_mul(-4, checked_mul(3 + n, 2 + checked_mul(3, n)));
    return c_unit() * RationalFn(LaurentPoly::monomial(1, e, 0));
  }
  throw std::domain_error("epsilon: undefined for n in {-1, 0, 1}");
}

LaurentPoly eta(std::int64_t n) {
  if (n <= 1) throw std::domain_error("eta: requires n > 1");
  return n == 2 ? t(1, 22, 0) : LaurentPoly(1);
}

std::optional<LaurentPoly> nongeom(std::int64_t n) {
  if (n == 0 || n % 3 != 0) return std::nullopt;
  if (n >= 3) return t(1, 0, 0) + t(-1, checked_mul(4, n + 3), 1);
  return t(1, 0, 1) + t(-1, checked_mul(-4, n + 3), 0);
}

std::span<const LaurentPoly> family_basis() {
  // Monomial factors (M, L) of the spec basis are Laurent units and are
  // handled by the fold-in step of reduce_by_basis.
  static const std::array<LaurentPoly, 5> basis = {
      t(1, 0, 0) + t(-1, 1, 0),   // 1 - M
      m_plus(),                   // 1 + M
      lm10_plus(),                // 1 + LM^10
      LaurentPoly(1) - t(1, 12, 1),  // 1 - LM^12
      lm12_plus(),                // 1 + LM^12
  };
  return basis;
}

}  // namespace pretzel::tables
