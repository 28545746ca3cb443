// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "gvmot/algebra/numbers.hpp"
#include "gvmot/error.hpp"

namespace gvmot {

/// Exponent pair of t^t s^s. The s exponent is never negative.
struct Monomial {
  std::int64_t t = 0;
  std::int64_t s = 0;

  auto operator<=>(const Monomial&) const = default;
};

/// Element of R[t^{+-1}, s] for R = Z or Q.
///
/// Terms are kept in a map ordered lexicographically on (t, s) with no zero
/// coefficients, so structural equality is semantic equality.
template <class Coeff>
class Poly {
 public:
  using Terms = std::map<Monomial, Coeff>;

  Poly() = default;
  Poly(const Coeff& c) {  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
  }
  Poly(int c) : Poly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Coeff& c, std::int64_t t_exp, std::int64_t s_exp) {
    if (s_exp < 0) fail(ErrorKind::InvalidArgument, "negative power of s");
    Poly p;
    if (sgn(c) != 0) p.terms_.emplace(Monomial{t_exp, s_exp}, c);
    return p;
  }
  static Poly t(std::int64_t e = 1) { return monomial(Coeff(1), e, 0); }
  static Poly s(std::int64_t e = 1) { return monomial(Coeff(1), 0, e); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coeff coeff(std::int64_t t_exp, std::int64_t s_exp) const {
    auto it = terms_.find(Monomial{t_exp, s_exp});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// True when no term involves s.
  bool is_t_only() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.s == 0; });
  }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }

  std::int64_t min_t() const { return extremum([](const Monomial& m) { return m.t; }, true); }
  std::int64_t max_t() const { return extremum([](const Monomial& m) { return m.t; }, false); }
  std::int64_t min_s() const { return extremum([](const Monomial& m) { return m.s; }, true); }
  std::int64_t max_s() const { return extremum([](const Monomial& m) { return m.s; }, false); }

  /// Multiplies by t^k.
  Poly shift_t(std::int64_t k) const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Monomial{m.t + k, m.s}, c);
    return r;
  }

  /// Divides by s^k; every term must carry at least s^k.
  Poly divide_s(std::int64_t k) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      if (m.s < k) fail(ErrorKind::InvalidArgument, "s-power does not divide polynomial");
      r.terms_.emplace_hint(r.terms_.end(), Monomial{m.t, m.s - k}, c);
    }
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const Coeff& k) {
    if (sgn(k) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Coeff prod = ca * cb;
        r.add_term(Monomial{ma.t + mb.t, ma.s + mb.s}, prod);
      }
    }
    return r;
  }
  friend Poly operator*(Poly a, const Coeff& k) { return a *= k; }
  friend Poly operator*(const Coeff& k, Poly a) { return a *= k; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Adds c * t^m.t s^m.s in place.
  void add_term(const Monomial& m, const Coeff& c) {
    if (sgn(c) == 0) return;
    if (m.s < 0) fail(ErrorKind::InvalidArgument, "negative power of s");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

 private:
  template <class Key>
  std::int64_t extremum(Key key, bool want_min) const {
    if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
    std::int64_t best = key(terms_.begin()->first);
    for (const auto& [m, c] : terms_) best = want_min ? std::min(best, key(m)) : std::max(best, key(m));
    return best;
  }

  Terms terms_;
};

using LaurentPoly = Poly<BigInt>;
using QLaurentPoly = Poly<BigRational>;

/// max{a + 2b : q^{a,b} != 0}.
template <class Coeff>
std::int64_t m_degree(const Poly<Coeff>& q) {
  if (q.is_zero()) fail(ErrorKind::ZeroPolynomial, "m-degree of the zero polynomial");
  std::int64_t best = q.terms().begin()->first.t + 2 * q.terms().begin()->first.s;
  for (const auto& [m, c] : q.terms()) best = std::max(best, m.t + 2 * m.s);
  return best;
}

/// t^{-m(q)/2} q; requires m(q) even.
LaurentPoly flat(const LaurentPoly& q);

LaurentPoly to_integer_poly(const QLaurentPoly& q);  // throws NotPolynomial on fractional coefficients
QLaurentPoly to_rational_poly(const LaurentPoly& q);

/// Human-readable form, terms descending in a + 2b and then in the s exponent,
/// e.g. "s^2 + t^2", "-2*t^-1*s + 1".
std::string to_string(const LaurentPoly& q);
std::string to_string(const QLaurentPoly& q);

}  // namespace gvmot
