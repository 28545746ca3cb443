// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/algebra/numbers.hpp"

#include <cctype>

#include "gvmot/error.hpp"

namespace gvmot {
namespace {

bool is_decimal_integer(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_decimal_integer(text)) fail(ErrorKind::Schema, "not an integer: '" + std::string(text) + "'");
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    fail(ErrorKind::Schema, "signed denominator in '" + std::string(text) + "'");
  }
  BigInt den = parse_bigint(den_text);
  if (den == 0) fail(ErrorKind::Schema, "zero denominator in '" + std::string(text) + "'");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigRational power(const BigRational& x, std::uint64_t e) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

BigRational power(const BigRational& x, std::int64_t e) {
  if (e >= 0) return power(x, static_cast<std::uint64_t>(e));
  if (sgn(x) == 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
  BigRational inv = 1 / x;
  return power(inv, static_cast<std::uint64_t>(-e));
}

}  // namespace gvmot
