#include "pretzel/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace pretzel {

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == ExpVec{} &&
         terms_.begin()->second == 1;
}

Rational LaurentPoly::coeff(std::int64_t em, std::int64_t el) const {
  auto it = terms_.find(ExpVec{em, el});
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const ExpVec, Rational>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

Rational LaurentPoly::eval_at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r -= b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      r.add_term(ExpVec{checked_add(ea.m, eb.m), checked_add(ea.l, eb.l)}, ca * cb);
    }
  }
  return r;
}

LaurentPoly monomial_mul(const LaurentPoly& p, const Rational& coeff,
                         std::int64_t em, std::int64_t el) {
  if (coeff.is_zero()) throw std::invalid_argument("monomial_mul: zero is not a unit");
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    r.add_term(ExpVec{checked_add(e.m, em), checked_add(e.l, el)}, c * coeff);
  }
  return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly r = 1;
  LaurentPoly base = p;
  while (k != 0) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k != 0) base *= base;
  }
  return r;
}

LaurentPoly substitute(const LaurentPoly& p, const GeneralSubst& s) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (s.i_power_rule && (e.m % 2) != 0) {
      throw std::domain_error("substitute: odd M-exponent under the i-power rule");
    }
    std::int64_t m2 = checked_add(checked_add(checked_mul(e.m, s.image_m.m2),
                                              checked_mul(e.l, s.image_l.m2)),
                                  checked_mul(2, s.unit_exp.m));
    std::int64_t l2 = checked_add(checked_add(checked_mul(e.m, s.image_m.l2),
                                              checked_mul(e.l, s.image_l.l2)),
                                  checked_mul(2, s.unit_exp.l));
    if ((m2 % 2) != 0 || (l2 % 2) != 0) {
      throw std::domain_error("substitute: non-integral exponent");
    }
    int sign = s.unit_sign;
    if (s.image_m.sign < 0 && (e.m % 2) != 0) sign = -sign;
    if (s.image_l.sign < 0 && (e.l % 2) != 0) sign = -sign;
    if (s.i_power_rule && ((e.m / 2) % 2) != 0) sign = -sign;
    r.add_term(ExpVec{m2 / 2, l2 / 2}, sign < 0 ? Rational(-c) : c);
  }
  return r;
}

namespace {

struct ExpBox {
  std::int64_t min_m, max_m, min_l, max_l;
};

ExpBox bounding_box(const LaurentPoly& p) {
  ExpBox b{INT64_MAX, INT64_MIN, INT64_MAX, INT64_MIN};
  for (const auto& [e, c] : p.terms()) {
    b.min_m = std::min(b.min_m, e.m);
    b.max_m = std::max(b.max_m, e.m);
    b.min_l = std::min(b.min_l, e.l);
    b.max_l = std::max(b.max_l, e.l);
  }
  return b;
}

}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  if (p.is_zero()) return LaurentPoly{};

  // Newton polygons add under multiplication, so any quotient's support lies
  // in the coordinate-wise difference of the bounding boxes.
  const ExpBox bp = bounding_box(p);
  const ExpBox bd = bounding_box(d);
  const ExpBox bq{bp.min_m - bd.min_m, bp.max_m - bd.max_m,
                  bp.min_l - bd.min_l, bp.max_l - bd.max_l};
  if (bq.min_m > bq.max_m || bq.min_l > bq.max_l) return std::nullopt;

  const auto& [de, dc] = d.leading_term();
  LaurentPoly q;
  LaurentPoly r = p;
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading_term();
    const ExpVec te{checked_add(re.m, -de.m), checked_add(re.l, -de.l)};
    if (te.m < bq.min_m || te.m > bq.max_m || te.l < bq.min_l || te.l > bq.max_l) {
      return std::nullopt;
    }
    LaurentPoly t = LaurentPoly::monomial(rc / dc, te.m, te.l);
    q += t;
    r -= t * d;
  }
  return q;
}

bool has_even_m_exponents(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if ((e.m % 2) != 0) return false;
  }
  return true;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    const bool has_vars = e.m != 0 || e.l != 0;
    if (!has_vars || a != 1) {
      out << a.str();
      if (has_vars) out << "*";
    }
    if (e.l != 0) {
      out << "L";
      if (e.l != 1) out << "^" << e.l;
      if (e.m != 0) out << "*";
    }
    if (e.m != 0) {
      out << "M";
      if (e.m != 1) out << "^" << e.m;
    }
  }
  return out.str();
}

}  // namespace pretzel
