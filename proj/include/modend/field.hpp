/**
 * @file field.hpp
 * @brief Exact arithmetic in a number field Q[x]/(p(x)).
 *
 * A Field is presented by a monic polynomial p of degree d >= 1 with rational
 * coefficients (constant term first). Elements are stored as the d rational
 * coefficients of their reduced representative in the generator theta, so
 * equality is coefficient-wise. Irreducibility of p is trusted: if an inverse
 * is requested for an element sharing a factor with p, ZeroDivisorDetected is
 * thrown.
 *
 * @code{.cpp}
 * auto k = Field::make({-5, 0, 1});          // Q[x]/(x^2 - 5)
 * auto t = k->generator();
 * auto inv = k->one() / t;                  // theta / 5
 * @endcode
 */

#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "modend/errors.hpp"

namespace modend {

using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  std::string s = text;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (s.empty() || r.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, "bad rational '" + text + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

/// Canonical "p/q" text ("p" when the denominator is 1).
inline std::string format_rational(const Rational& r) { return r.get_str(10); }

namespace poly {

using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

/// Remainder and quotient of a by b (b nonzero, trimmed).
inline void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
    trim(a);
  }
  r = a;
  trim(q);
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace poly

class FieldElement;
class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A number field Q[x]/(p); immutable once constructed and shared by pointer.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// p given constant-first; must be monic of degree >= 1.
  static FieldPtr make(std::vector<Rational> min_poly) {
    for (auto& c : min_poly) c.canonicalize();
    poly::trim(min_poly);
    if (min_poly.size() < 2) throw Error(ErrorKind::ParseError, "field polynomial must have degree >= 1");
    if (min_poly.back() != 1) throw Error(ErrorKind::ParseError, "field polynomial must be monic");
    return FieldPtr(new Field(std::move(min_poly)));
  }

  static FieldPtr rationals() { return make({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(p_.size()) - 1; }
  const std::vector<Rational>& min_poly() const { return p_; }

  bool same_as(const Field& o) const { return this == &o || p_ == o.p_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& r) const;
  FieldElement generator() const;
  FieldElement from_coeffs(std::vector<Rational> coeffs) const;

 private:
  explicit Field(std::vector<Rational> p) : p_(std::move(p)) {}
  std::vector<Rational> p_;
};

/// An element of a Field, stored as exactly degree() reduced coefficients.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr f, std::vector<Rational> c) : f_(std::move(f)), c_(std::move(c)) {}

  const FieldPtr& field() const { return f_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }

  /// True when the element lies in Q (all higher coefficients vanish).
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }

  FieldElement operator+(const FieldElement& o) const {
    check_same(o);
    std::vector<Rational> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return {f_, std::move(r)};
  }

  FieldElement operator-(const FieldElement& o) const {
    check_same(o);
    std::vector<Rational> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return {f_, std::move(r)};
  }

  FieldElement operator-() const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x = -x;
    return {f_, std::move(r)};
  }

  FieldElement operator*(const FieldElement& o) const {
    check_same(o);
    const size_t d = c_.size();
    if (d == 1) return {f_, {c_[0] * o.c_[0]}};
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
      if (sgn(c_[i]) == 0) continue;
      for (size_t j = 0; j < d; ++j)
        if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    const auto& p = f_->min_poly();
    for (size_t k = prod.size() - 1; k >= d; --k) {
      if (sgn(prod[k]) == 0) continue;
      Rational lead = prod[k];
      for (size_t t = 0; t <= d; ++t) prod[k - d + t] -= lead * p[t];
    }
    prod.resize(d);
    return {f_, std::move(prod)};
  }

  FieldElement inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const size_t d = c_.size();
    if (d == 1) return {f_, {1 / c_[0]}};
    // Extended Euclid: track s with s * a == r (mod p).
    poly::Poly r0 = f_->min_poly(), r1 = c_;
    poly::trim(r1);
    poly::Poly s0, s1{Rational(1)};
    while (poly::degree(r1) > 0) {
      poly::Poly q, rem;
      poly::divmod(r0, r1, q, rem);
      poly::Poly s2 = poly::sub(s0, poly::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
      if (r1.empty())
        throw Error(ErrorKind::ZeroDivisorDetected, "element shares a factor with the field polynomial");
    }
    Rational scale = 1 / r1[0];
    std::vector<Rational> out(d, Rational(0));
    poly::Poly qq, red;
    poly::divmod(s1, f_->min_poly(), qq, red);
    for (size_t i = 0; i < red.size() && i < d; ++i) out[i] = red[i] * scale;
    return {f_, std::move(out)};
  }

  FieldElement operator/(const FieldElement& o) const {
    check_same(o);
    return *this * o.inverse();
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const { return c_ == o.c_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Human-readable form such as "1/2 + 3*t^2" (t is the generator).
  std::string to_string() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      if (!out.empty()) out += " + ";
      out += format_rational(c_[i]);
      if (i == 1) out += "*t";
      if (i > 1) out += "*t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_same(const FieldElement& o) const {
    if (c_.size() != o.c_.size()) throw Error(ErrorKind::DimensionMismatch, "field elements over different fields");
  }

  FieldPtr f_;
  std::vector<Rational> c_;
};

inline FieldElement Field::zero() const {
  return {shared_from_this(), std::vector<Rational>(degree(), Rational(0))};
}

inline FieldElement Field::one() const { return from_rational(Rational(1)); }

inline FieldElement Field::from_rational(const Rational& r) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = r;
  c[0].canonicalize();
  return {shared_from_this(), std::move(c)};
}

inline FieldElement Field::generator() const {
  if (degree() == 1) return from_rational(-p_[0]);
  std::vector<Rational> c(degree(), Rational(0));
  c[1] = 1;
  return {shared_from_this(), std::move(c)};
}

inline FieldElement Field::from_coeffs(std::vector<Rational> coeffs) const {
  // Reduce an arbitrary-length coefficient list modulo p.
  for (auto& c : coeffs) c.canonicalize();
  poly::Poly a(std::move(coeffs)), q, r;
  poly::trim(a);
  poly::divmod(a, p_, q, r);
  r.resize(degree(), Rational(0));
  return {shared_from_this(), std::move(r)};
}

/// The four field operations addressed by name.
enum class FieldOp { Add, Sub, Mul, Div };

inline FieldElement field_arith(FieldOp op, const FieldElement& a, const FieldElement& b) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  return a;
}

}  // namespace modend
