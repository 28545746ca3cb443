// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "gvmot/error.hpp"
#include "gvmot/gwseries/transform.hpp"

using namespace gvmot;
using namespace gvmot::gw;

namespace {

using Series = std::vector<BigRational>;  // coefficients of x^0, x^1, ...

Series mul(const Series& a, const Series& b, std::size_t n) {
  Series out(n, BigRational(0));
  for (std::size_t i = 0; i < std::min(n, a.size()); ++i) {
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Coefficients of (2 sin(k x / 2))^{2g-2} as exponent -> value, up to x^max_exp,
/// from the Taylor series of sine and naive series products and inversion.
std::map<int, BigRational> sine_power(int g, long k, int max_exp) {
  const std::size_t n = static_cast<std::size_t>(max_exp + 4);
  // 2 sin(k x / 2) / x = sum_m (-1)^m (k/2)^{2m+1} 2 x^{2m} / (2m+1)!
  Series base(n, BigRational(0));
  BigRational half_k(k, 2);
  half_k.canonicalize();
  BigRational pow = half_k;
  BigInt fact = 1;
  for (std::size_t m = 0; 2 * m < n; ++m) {
    if (m > 0) {
      pow *= half_k * half_k;
      fact *= (2 * m) * (2 * m + 1);
    }
    BigRational c = 2 * pow / BigRational(fact);
    base[2 * m] = m % 2 == 0 ? c : BigRational(-c);
  }
  Series acc(n, BigRational(0));
  acc[0] = 1;
  const int e = 2 * g - 2;
  for (int i = 0; i < std::abs(e); ++i) acc = mul(acc, base, n);
  if (e < 0) {
    Series inv(n, BigRational(0));
    inv[0] = 1 / acc[0];
    for (std::size_t m = 1; m < n; ++m) {
      BigRational s = 0;
      for (std::size_t j = 1; j <= m; ++j) s += acc[j] * inv[m - j];
      inv[m] = -s / acc[0];
    }
    acc = inv;
  }
  std::map<int, BigRational> out;
  for (std::size_t i = 0; i < n; ++i) {
    int exp = e + static_cast<int>(i);
    if (exp <= max_exp && acc[i] != 0) out[exp] = acc[i];
  }
  return out;
}

/// Direct rank-one multiple-cover sum.
std::map<std::pair<long, int>, BigRational> oracle(const std::map<std::pair<int, long>, long>& table, long degree_cut,
                                                   int lambda_cut) {
  std::map<std::pair<long, int>, BigRational> out;
  for (const auto& [key, n] : table) {
    const auto [g, d] = key;
    for (long k = 1; k * d <= degree_cut; ++k) {
      for (const auto& [e, c] : sine_power(g, k, lambda_cut)) {
        BigRational weight(n, k);
        weight.canonicalize();
        out[{k * d, e}] += weight * c;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GVTable rank_one_table(const std::map<std::pair<int, long>, long>& entries, int genus_max, long degree_cut) {
  GVTable t;
  t.omega = {BigRational(1)};
  t.genus_max = genus_max;
  t.degree_cut = degree_cut;
  for (const auto& [key, n] : entries) t.add(key.first, {key.second}, BigInt(n));
  return t;
}

}  // namespace

TEST_CASE("sine power coefficients") {
  auto c0 = two_sin_power_coefficients(0, 3);
  auto direct = sine_power(0, 1, 4);
  for (int m = 0; m <= 3; ++m) CHECK(c0[static_cast<std::size_t>(m)] == direct[2 * m - 2]);
  CHECK(c0[1] == BigRational(1, 12));
  CHECK(two_sin_power_coefficients(1, 2) == std::vector<BigRational>{1, 0, 0});
}

TEST_CASE("gv_to_gw") {
  GVTable empty = rank_one_table({}, 0, 5);
  CHECK(gv_to_gw(empty, BigRational(5), 2).coeffs.empty());

  auto conifold = gv_to_gw(rank_one_table({{{0, 1}, 1}}, 0, 10), BigRational(10), 2);
  for (long d = 1; d <= 10; ++d) CHECK(conifold.at({d}, -2) == BigRational(BigInt(1), BigInt(d * d * d)));
  auto expected = oracle({{{0, 1}, 1}}, 10, 2);
  for (const auto& [key, c] : expected) CHECK(conifold.at({key.first}, key.second) == c);
  CHECK(conifold.coeffs.size() == expected.size());

  auto genus_one = gv_to_gw(rank_one_table({{{1, 1}, 1}}, 1, 6), BigRational(6), 4);
  for (long k = 1; k <= 6; ++k) {
    CHECK(genus_one.at({k}, 0) == BigRational(1, k));
    CHECK(genus_one.at({k}, 2) == 0);
  }
}

TEST_CASE("gv_to_gw matches the direct multiple-cover sum") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> deg(1, 5), val(-4, 4);
  std::uniform_int_distribution<int> genus(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<std::pair<int, long>, long> entries;
    for (int i = 0; i < 4; ++i) entries[{genus(rng), deg(rng)}] += val(rng);
    std::erase_if(entries, [](const auto& kv) { return kv.second == 0; });
    auto series = gv_to_gw(rank_one_table(entries, 3, 8), BigRational(8), 6);
    auto expected = oracle(entries, 8, 6);
    CHECK(series.coeffs.size() == expected.size());
    for (const auto& [key, c] : expected) CHECK(series.at({key.first}, key.second) == c);
  }
}

TEST_CASE("cones must be pointed") {
  GVTable t = rank_one_table({}, 0, 3);
  t.add(0, {0}, BigInt(1));
  CHECK_THROWS_AS(gv_to_gw(t, BigRational(3), 0), Error);
}

TEST_CASE("gw_to_gv") {
  GWSeries single;
  single.omega = {BigRational(1)};
  single.degree_cut = 1;
  single.lambda_cut = -2;
  single.add({1}, -2, BigRational(1));
  auto solved = gw_to_gv(single, 0);
  CHECK(solved.table.entries.size() == 1);
  CHECK(solved.table.at(0, {1}) == 1);

  GWSeries cubes = single;
  cubes.degree_cut = 8;
  for (long d = 2; d <= 8; ++d) cubes.add({d}, -2, BigRational(BigInt(1), BigInt(d * d * d)));
  auto inverse = gw_to_gv(cubes, 0);
  CHECK(inverse.non_integral.empty());
  CHECK(inverse.table.entries.size() == 1);
  CHECK(inverse.table.at(0, {1}) == 1);
}

TEST_CASE("round trip on random tables") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> deg(1, 6), val(-5, 5);
  std::uniform_int_distribution<int> genus(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::map<std::pair<int, long>, long> entries;
    for (int i = 0; i < 5; ++i) entries[{genus(rng), deg(rng)}] += val(rng);
    auto table = rank_one_table(entries, 3, 6);
    auto back = gw_to_gv(gv_to_gw(table, BigRational(6), 4), 3);
    CHECK(back.non_integral.empty());
    CHECK(back.table.entries == table.entries);
  }
}

TEST_CASE("truncation and integrality") {
  GWSeries s;
  s.omega = {BigRational(1)};
  s.degree_cut = 2;
  s.lambda_cut = 0;
  CHECK_THROWS_AS(gw_to_gv(s, 2), Error);

  s.add({1}, -2, BigRational(1, 2));
  auto solved = gw_to_gv(s, 1);
  // The fractional n_0 feeds every later class and genus it touches.
  REQUIRE(!solved.non_integral.empty());
  CHECK(solved.non_integral[0].beta == CurveClass{1});
  CHECK(solved.non_integral[1].value == BigRational(-1, 24));
  CHECK(solved.non_integral[0].value == BigRational(1, 2));
  CHECK(solved.non_integral[0].genus == 0);
  try {
    gw_to_gv(s, 1, true);
    FAIL("expected NonIntegral");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegral);
  }
}
