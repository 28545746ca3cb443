// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <map>
#include <random>

#include "gvmot/algebra/matrix.hpp"
#include "gvmot/error.hpp"
#include "gvmot/lefschetz/bispin.hpp"
#include "gvmot/lefschetz/census.hpp"
#include "gvmot/lefschetz/sl2.hpp"
#include "support.hpp"

using namespace gvmot;
using namespace gvmot::lefschetz;

namespace {

using Weights = std::map<int, long>;

/// Weight multiset of a spin-j string: -2j, -2j+2, ..., 2j (doubled weights).
Weights spin_weights(int two_j) {
  Weights w;
  for (int x = -two_j; x <= two_j; x += 2) w[x] += 1;
  return w;
}

Weights convolve(const Weights& a, const Weights& b) {
  Weights out;
  for (const auto& [x, m] : a) {
    for (const auto& [y, n] : b) out[x + y] += m * n;
  }
  return out;
}

/// Peels spin strings off the top weight until nothing is left.
std::map<int, long> peel(Weights w) {
  std::map<int, long> spins;
  for (;;) {
    int top = -1;
    for (const auto& [x, m] : w) {
      if (m != 0) top = std::max(top, x);
    }
    if (top < 0) {
      bool empty = true;
      for (const auto& [x, m] : w) empty = empty && m == 0;
      if (empty) return spins;
      top = 0;
    }
    long m = w[top];
    spins[top] += m;
    for (int x = -top; x <= top; x += 2) w[x] -= m;
  }
}

SpinMultiset to_spins(const std::map<int, long>& m) {
  SpinMultiset s;
  for (const auto& [two_j, n] : m) s.add(two_j, BigInt(n));
  return s;
}

Weights i1_weights() {
  Weights w = spin_weights(1);
  w[0] += 2;
  return w;
}

}  // namespace

TEST_CASE("spin_decompose") {
  CHECK(spin_decompose({{-2, 1}, {0, 1}, {2, 1}}) == SpinMultiset{{2, BigInt(1)}});
  CHECK(spin_decompose({{-1, 1}, {0, 2}, {1, 1}}) == SpinMultiset{{1, BigInt(1)}, {0, BigInt(2)}});
  CHECK(spin_decompose({{0, 5}}) == SpinMultiset{{0, BigInt(5)}});
  CHECK_THROWS_AS(spin_decompose({{-2, 1}, {0, 1}}), Error);
  // Not unimodal: more in degree 2 than in degree 0.
  CHECK_THROWS_AS(spin_decompose({{-2, 2}, {0, 1}, {2, 2}}), Error);
}

TEST_CASE("tensor products") {
  CHECK(tensor(SpinMultiset::irreducible(1), SpinMultiset::irreducible(1)) ==
        SpinMultiset{{2, BigInt(1)}, {0, BigInt(1)}});
  auto i1 = i_g(1);
  CHECK(tensor(i1, i1) == to_spins(peel(convolve(i1_weights(), i1_weights()))));
  SpinMultiset x{{3, BigInt(2)}, {0, BigInt(-1)}};
  CHECK(tensor(x, SpinMultiset::irreducible(0)) == x);
}

TEST_CASE("I_g") {
  CHECK(i_g(0) == SpinMultiset{{0, BigInt(1)}});
  CHECK(i_g(1) == SpinMultiset{{1, BigInt(1)}, {0, BigInt(2)}});
  CHECK(i_g(2) == to_spins(peel(convolve(i1_weights(), i1_weights()))));
  for (int g = 0; g <= 5; ++g) CHECK(i_g(g).dimension() == BigInt(1) << (2 * g));
}

TEST_CASE("hst_decompose") {
  auto point = hst_decompose(BispinContent{{{0, 0}, BigInt(1)}});
  CHECK(point.size() == 1);
  CHECK(point.at(0) == SpinMultiset{{0, BigInt(1)}});

  auto i1 = hst_decompose(BispinContent{{{1, 0}, BigInt(1)}, {{0, 0}, BigInt(2)}});
  CHECK(i1.size() == 1);
  CHECK(i1.at(1) == SpinMultiset{{0, BigInt(1)}});

  // Oracle: solve (1)_L = sum c_g I_g from the top left spin down, using
  // weight characters only.
  std::map<int, Weights> ig{{0, spin_weights(0)}, {1, i1_weights()}};
  ig[2] = convolve(ig[1], ig[1]);
  Weights rest = spin_weights(2);
  std::map<int, long> coeff;
  for (int g = 2; g >= 0; --g) {
    long c = rest[g];
    coeff[g] = c;
    for (const auto& [x, m] : ig[g]) rest[x] -= c * m;
  }
  auto spin1 = hst_decompose(BispinContent{{{2, 0}, BigInt(1)}});
  for (int g = 0; g <= 2; ++g) CHECK(spin1.at(g) == SpinMultiset{{0, BigInt(coeff[g])}});
  CHECK(coeff == std::map<int, long>{{0, 3}, {1, -4}, {2, 1}});
}

TEST_CASE("hst_ng") {
  BispinContent point{{{0, 0}, BigInt(1)}};
  CHECK(hst_ng(point, 0) == 1);
  BispinContent spin1{{{2, 0}, BigInt(1)}};
  CHECK(hst_ng(spin1, 0) == 3);
  CHECK(hst_ng(spin1, 1) == -4);
  CHECK(hst_ng(spin1, 2) == 1);
  CHECK(hst_ng(spin1, 3) == 0);
  CHECK(hst_ng(point, 7) == 0);
  // Right spin 1/2 carries the sign (-1)^{2j} (2j+1).
  CHECK(hst_ng(BispinContent{{{0, 1}, BigInt(1)}}, 0) == -2);
}

TEST_CASE("census_from_bispin") {
  CHECK(census_from_bispin(BispinContent{{{0, 0}, BigInt(1)}}) == JordanCensus{{{0, 1}, BigInt(1)}});
  CHECK(census_from_bispin(BispinContent{{{0, 2}, BigInt(1)}}) == JordanCensus{{{-2, 3}, BigInt(1)}});
  JordanCensus brute;
  for (const auto& [w, m] : spin_weights(2)) brute.add(w, 1, BigInt(m));
  CHECK(census_from_bispin(BispinContent{{{2, 0}, BigInt(1)}}) == brute);
  CHECK_THROWS_AS(census_from_bispin(BispinContent{{{0, 0}, BigInt(-1)}}), Error);
}

TEST_CASE("alt_ng") {
  CHECK(alt_ng(JordanCensus{{{0, 1}, BigInt(1)}}, 0) == 1);
  JordanCensus three{{{-2, 1}, BigInt(1)}, {{0, 1}, BigInt(1)}, {{2, 1}, BigInt(1)}};
  BispinContent spin1{{{2, 0}, BigInt(1)}};
  for (int g = 0; g <= 2; ++g) CHECK(alt_ng(three, g) == hst_ng(spin1, g));
  for (int g = 0; g <= 4; ++g) CHECK(alt_ng(JordanCensus{}, g) == 0);
}

TEST_CASE("jordan_census on small operators") {
  Matrix zero(3, 3);
  GradedNilpotent flat_space({{0, 3}}, {});
  CHECK(jordan_census(flat_space) == JordanCensus{{{0, 1}, BigInt(3)}});

  Matrix one(1, 1);
  one(0, 0) = 1;
  GradedNilpotent chain({{-2, 1}, {0, 1}, {2, 1}}, {{-2, one}, {0, one}});
  CHECK(jordan_census(chain) == JordanCensus{{{-2, 3}, BigInt(1)}});

  CHECK_THROWS_AS(GradedNilpotent({{0, 2}, {2, 1}}, {{0, Matrix(2, 2)}}), Error);
}

TEST_CASE("jordan_census matches a dense Jordan-form oracle") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> dim(0, 3), entry(-1, 1);
  for (int trial = 0; trial < 60; ++trial) {
    std::map<int, std::size_t> dims;
    for (int deg = -4; deg <= 4; deg += 2) {
      if (auto d = dim(rng); d > 0) dims[deg] = static_cast<std::size_t>(d);
    }
    std::map<int, Matrix> maps;
    for (const auto& [deg, d] : dims) {
      auto next = dims.find(deg + 2);
      if (next == dims.end()) continue;
      Matrix m(next->second, d);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
      }
      maps.emplace(deg, m);
    }
    GradedNilpotent x(dims, maps);
    auto census = jordan_census(x);

    // Dense operator on the direct sum.
    std::map<int, std::size_t> offset;
    std::size_t n = 0;
    for (const auto& [deg, d] : dims) {
      offset[deg] = n;
      n += d;
    }
    Matrix dense(n, n);
    for (const auto& [deg, m] : maps) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) dense(offset[deg + 2] + r, offset[deg] + c) = m(r, c);
      }
    }
    // Blocks of size >= k number rank(N^{k-1}) - rank(N^k).
    std::vector<long> ranks{static_cast<long>(n)};
    Matrix power = Matrix::identity(n);
    for (std::size_t k = 1; k <= n + 1; ++k) {
      power = dense * power;
      ranks.push_back(static_cast<long>(rank(power)));
    }
    std::map<int, long> by_length_oracle;
    for (std::size_t l = 1; l + 1 < ranks.size(); ++l) {
      long count = (ranks[l - 1] - ranks[l]) - (ranks[l] - ranks[l + 1]);
      if (count != 0) by_length_oracle[static_cast<int>(l)] = count;
    }
    std::map<int, long> by_length;
    std::map<int, long> dims_from_cells;
    for (const auto& [cell, count] : census.entries()) {
      by_length[cell.length] += count.get_si();
      for (int i = 0; i < cell.length; ++i) dims_from_cells[cell.alpha + 2 * i] += count.get_si();
    }
    CHECK(by_length == by_length_oracle);
    std::map<int, long> dims_long;
    for (const auto& [deg, d] : dims) dims_long[deg] = static_cast<long>(d);
    CHECK(dims_from_cells == dims_long);
    CHECK(census.is_nonnegative());
  }
}

TEST_CASE("realized right action") {
  BispinContent v{{{1, 2}, BigInt(2)}, {{0, 1}, BigInt(1)}};
  auto x = realize_right_action(v);
  CHECK(jordan_census(x) == census_from_bispin(v));
  CHECK(census_from_bispin(v).total_dimension() == BigInt(static_cast<unsigned long>(x.total_dimension())));
}

TEST_CASE("census polynomials and the Clebsch-Gordan combinator") {
  JordanCensus c{{{-2, 3}, BigInt(1)}, {{0, 1}, BigInt(2)}};
  auto p = census_polynomial(c);
  CHECK(p == testing::T(-2) * testing::S(2) + testing::C(2));
  CHECK(census_from_polynomial(p) == c);
  // Strings of length 2 and 2 combine into lengths 3 and 1.
  auto two = testing::T(-1) * testing::S(1);
  CHECK(clebsch_gordan_product(two, two) == testing::T(-2) * testing::S(2) + testing::C(1));
  CHECK(clebsch_gordan_product(testing::C(1), p) == p);
}
