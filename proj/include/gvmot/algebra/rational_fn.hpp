// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "gvmot/algebra/laurent_poly.hpp"

namespace gvmot {

/// Element of Q(t, s).
///
/// Stored as a pair of integer Laurent polynomials. Normalization clears
/// rational coefficients, removes the common content, moves all t-powers into
/// the numerator, strips common powers of s and cancels the gcd whenever one
/// side involves t only. Equality is decided by cross-multiplication, so the
/// representation need not be fully reduced for correctness.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(const LaurentPoly& p);   // NOLINT(google-explicit-constructor)
  RationalFn(const BigRational& q);   // NOLINT(google-explicit-constructor)
  RationalFn(int c) : RationalFn(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static RationalFn fraction(const LaurentPoly& num, const LaurentPoly& den);
  static RationalFn fraction(const QLaurentPoly& num, const QLaurentPoly& den);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }

  /// The value as an element of Z[t^{+-1}, s], if it is one.
  std::optional<LaurentPoly> as_polynomial() const;

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

  friend bool operator==(const RationalFn& a, const RationalFn& b);

  RationalFn inverse() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

/// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string to_string(const RationalFn& f);

}  // namespace gvmot
