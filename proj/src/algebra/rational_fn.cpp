// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/algebra/rational_fn.hpp"

#include <map>
#include <vector>

namespace gvmot {
namespace {

// Dense univariate polynomial over Q, index = degree.
struct UPoly {
  std::vector<BigRational> c;

  void trim() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  std::size_t degree() const { return c.size() - 1; }
};

UPoly monic(UPoly p) {
  BigRational lead = p.c.back();
  for (auto& x : p.c) x /= lead;
  return p;
}

// Returns quotient, leaves remainder in a.
UPoly divide(UPoly& a, const UPoly& b) {
  UPoly q;
  if (a.c.size() < b.c.size()) return q;
  q.c.assign(a.c.size() - b.c.size() + 1, BigRational(0));
  const BigRational& lead = b.c.back();
  for (std::size_t i = a.c.size(); i-- >= b.c.size();) {
    if (sgn(a.c[i]) == 0) continue;
    BigRational f = a.c[i] / lead;
    std::size_t shift = i - (b.c.size() - 1);
    q.c[shift] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j) a.c[shift + j] -= f * b.c[j];
  }
  a.trim();
  q.trim();
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a;
    divide(r, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : monic(a);
}

// A t-only Laurent polynomial as t^shift * u(t) with u(0) != 0.
UPoly to_upoly(const QLaurentPoly& p, std::int64_t& shift) {
  shift = p.min_t();
  UPoly u;
  u.c.assign(static_cast<std::size_t>(p.max_t() - shift + 1), BigRational(0));
  for (const auto& [m, c] : p.terms()) u.c[static_cast<std::size_t>(m.t - shift)] = c;
  return u;
}

QLaurentPoly from_upoly(const UPoly& u, std::int64_t shift, std::int64_t s_exp) {
  QLaurentPoly r;
  for (std::size_t i = 0; i < u.c.size(); ++i) r.add_term(Monomial{static_cast<std::int64_t>(i) + shift, s_exp}, u.c[i]);
  return r;
}

std::map<std::int64_t, QLaurentPoly> s_slices(const QLaurentPoly& p) {
  std::map<std::int64_t, QLaurentPoly> out;
  for (const auto& [m, c] : p.terms()) out[m.s].add_term(Monomial{m.t, 0}, c);
  return out;
}

// Cancels gcd(univariate, every s-slice of other) from both sides.
void cancel_against_univariate(QLaurentPoly& univariate, QLaurentPoly& other) {
  std::int64_t ushift = 0;
  UPoly u = to_upoly(univariate, ushift);
  if (u.degree() == 0) return;
  auto slices = s_slices(other);
  UPoly g = u;
  std::map<std::int64_t, std::pair<UPoly, std::int64_t>> dense;
  for (const auto& [s_exp, slice] : slices) {
    std::int64_t shift = 0;
    UPoly d = to_upoly(slice, shift);
    g = gcd(g, d);
    if (g.degree() == 0) return;
    dense.emplace(s_exp, std::make_pair(std::move(d), shift));
  }
  UPoly rem = u;
  UPoly uq = divide(rem, g);
  univariate = from_upoly(uq, ushift, 0);
  QLaurentPoly rebuilt;
  for (auto& [s_exp, entry] : dense) {
    UPoly r = entry.first;
    UPoly q = divide(r, g);
    rebuilt += from_upoly(q, entry.second, s_exp);
  }
  other = std::move(rebuilt);
}

BigInt lcm_of_denominators(const QLaurentPoly& p, BigInt acc) {
  for (const auto& [m, c] : p.terms()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
  return acc;
}

BigInt gcd_of_numerators(const QLaurentPoly& p, BigInt acc) {
  for (const auto& [m, c] : p.terms()) mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.get_num_mpz_t());
  return acc;
}

}  // namespace

RationalFn::RationalFn(const LaurentPoly& p) : num_(p), den_(1) {}

RationalFn::RationalFn(const BigRational& q) : num_(BigInt(q.get_num())), den_(BigInt(q.get_den())) {}

RationalFn RationalFn::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  return fraction(to_rational_poly(num), to_rational_poly(den));
}

RationalFn RationalFn::fraction(const QLaurentPoly& num_in, const QLaurentPoly& den_in) {
  if (den_in.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  RationalFn r;
  if (num_in.is_zero()) return r;

  QLaurentPoly num = num_in.shift_t(-den_in.min_t());
  QLaurentPoly den = den_in.shift_t(-den_in.min_t());
  std::int64_t common_s = std::min(num.min_s(), den.min_s());
  if (common_s > 0) {
    num = num.divide_s(common_s);
    den = den.divide_s(common_s);
  }

  if (den.is_t_only()) {
    cancel_against_univariate(den, num);
  } else if (num.is_t_only()) {
    cancel_against_univariate(num, den);
  }
  // The cancellation may leave the denominator with a t-power factor again.
  std::int64_t dshift = den.min_t();
  if (dshift != 0) {
    num = num.shift_t(-dshift);
    den = den.shift_t(-dshift);
  }

  BigInt scale = lcm_of_denominators(den, lcm_of_denominators(num, BigInt(1)));
  num *= BigRational(scale);
  den *= BigRational(scale);
  BigInt content = gcd_of_numerators(den, gcd_of_numerators(num, BigInt(0)));
  if (sgn(den.terms().rbegin()->second) < 0) content = -content;
  BigRational inv(1);
  inv /= BigRational(content);
  num *= inv;
  den *= inv;
  r.num_ = to_integer_poly(num);
  r.den_ = to_integer_poly(den);
  return r;
}

std::optional<LaurentPoly> RationalFn::as_polynomial() const {
  if (den_ == LaurentPoly(1)) return num_;
  if (num_.is_zero()) return LaurentPoly();
  if (den_.size() == 1) {
    const auto& [m, c] = *den_.terms().begin();
    if (m.s > 0) return std::nullopt;
    LaurentPoly out;
    for (const auto& [mn, cn] : num_.terms()) {
      if (!mpz_divisible_p(cn.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
      out.add_term(Monomial{mn.t - m.t, mn.s}, BigInt(cn / c));
    }
    return out;
  }
  return std::nullopt;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = fraction(num_ + o.num_, den_);
  } else {
    *this = fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFn();
  *this = fraction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return fraction(den_, num_);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string to_string(const RationalFn& f) {
  if (f.denominator() == LaurentPoly(1)) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace gvmot
