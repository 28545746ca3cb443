// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gvmot {

/// Arbitrary-precision integer; no overflow semantics anywhere.
using BigInt = mpz_class;
/// Reduced fraction with positive denominator.
using BigRational = mpq_class;

BigInt parse_bigint(std::string_view text);
/// Accepts "p", "-p" or "p/q" in base 10; the result is canonical.
BigRational parse_rational(std::string_view text);

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRational& x) { return x.get_str(); }

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }

inline bool is_integer(const BigRational& x) { return x.get_den() == 1; }

/// C(n, k), zero unless 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::uint64_t n);

/// x^e for e >= 0.
BigRational power(const BigRational& x, std::uint64_t e);

/// Signed integer power of a nonzero rational.
BigRational power(const BigRational& x, std::int64_t e);

}  // namespace gvmot
