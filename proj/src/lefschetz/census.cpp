// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/lefschetz/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "gvmot/error.hpp"

namespace gvmot::lefschetz {

JordanCensus::JordanCensus(std::initializer_list<std::pair<const Cell, BigInt>> init) {
  for (const auto& [c, n] : init) add(c.alpha, c.length, n);
}

void JordanCensus::add(int alpha, int length, const BigInt& count) {
  if (length < 1) fail(ErrorKind::InvalidArgument, "Jordan cell of length " + std::to_string(length));
  if (sgn(count) == 0) return;
  auto [it, inserted] = cells_.try_emplace(Cell{alpha, length}, count);
  if (!inserted) {
    it->second += count;
    if (sgn(it->second) == 0) cells_.erase(it);
  }
}

BigInt JordanCensus::count(int alpha, int length) const {
  auto it = cells_.find(Cell{alpha, length});
  return it == cells_.end() ? BigInt(0) : it->second;
}

bool JordanCensus::is_nonnegative() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const auto& kv) { return sgn(kv.second) > 0; });
}

BigInt JordanCensus::total_dimension() const {
  BigInt d = 0;
  for (const auto& [c, n] : cells_) d += n * c.length;
  return d;
}

GradedNilpotent::GradedNilpotent(std::map<int, std::size_t> dims, std::map<int, Matrix> maps) {
  for (const auto& [deg, d] : dims) {
    if (d > 0) dims_.emplace(deg, d);
  }
  for (auto& [deg, m] : maps) {
    std::size_t src = dim(deg);
    std::size_t dst = dim(deg + 2);
    if (m.rows() != dst || m.cols() != src) {
      fail(ErrorKind::ShapeMismatch, "map out of degree " + std::to_string(deg) + " is " + std::to_string(m.rows()) +
                                         "x" + std::to_string(m.cols()) + ", expected " + std::to_string(dst) + "x" +
                                         std::to_string(src));
    }
    if (src > 0 && dst > 0 && !m.is_zero()) maps_.emplace(deg, std::move(m));
  }
}

std::size_t GradedNilpotent::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

Matrix GradedNilpotent::map_at(int degree) const {
  auto it = maps_.find(degree);
  if (it != maps_.end()) return it->second;
  return Matrix(dim(degree + 2), dim(degree));
}

std::size_t GradedNilpotent::total_dimension() const {
  std::size_t n = 0;
  for (const auto& [deg, d] : dims_) n += d;
  return n;
}

GradedNilpotent GradedNilpotent::conjugate(const std::map<int, Matrix>& change) const {
  auto basis_change = [&](int deg) {
    auto it = change.find(deg);
    if (it != change.end()) {
      if (it->second.rows() != dim(deg) || it->second.cols() != dim(deg)) {
        fail(ErrorKind::ShapeMismatch, "basis change in degree " + std::to_string(deg) + " has the wrong shape");
      }
      return it->second;
    }
    return Matrix::identity(dim(deg));
  };
  std::map<int, Matrix> maps;
  for (const auto& [deg, m] : maps_) {
    maps.emplace(deg, basis_change(deg + 2) * m * inverse(basis_change(deg)));
  }
  return GradedNilpotent(dims_, std::move(maps));
}

JordanCensus jordan_census(const GradedNilpotent& x) {
  // ranks[alpha][k] = rank of e^k : V_alpha -> V_{alpha+2k}; ranks[alpha][0] = dim.
  std::map<int, std::vector<std::size_t>> ranks;
  for (const auto& [deg, d] : x.dims()) {
    std::vector<std::size_t> r{d};
    Matrix power = Matrix::identity(d);
    for (int k = 1;; ++k) {
      int target = deg + 2 * k;
      if (x.dim(target) == 0) break;
      power = x.map_at(target - 2) * power;
      std::size_t rk = rank(power);
      if (rk == 0) break;
      r.push_back(rk);
    }
    ranks.emplace(deg, std::move(r));
  }
  auto rank_of = [&](int alpha, int k) -> std::size_t {
    auto it = ranks.find(alpha);
    if (it == ranks.end() || k < 0 || static_cast<std::size_t>(k) >= it->second.size()) return 0;
    return it->second[static_cast<std::size_t>(k)];
  };
  // Strings through alpha and alpha + 2k that start exactly at alpha.
  auto starting = [&](int alpha, int k) -> BigInt {
    return BigInt(static_cast<unsigned long>(rank_of(alpha, k))) -
           BigInt(static_cast<unsigned long>(rank_of(alpha - 2, k + 1)));
  };

  JordanCensus out;
  for (const auto& [alpha, r] : ranks) {
    for (int l = 1; l <= static_cast<int>(r.size()); ++l) {
      out.add(alpha, l, starting(alpha, l - 1) - starting(alpha, l));
    }
  }
  return out;
}

JordanCensus census_from_bispin(const BispinContent& v) {
  JordanCensus out;
  for (const auto& [k, m] : v.entries()) {
    if (sgn(m) < 0) fail(ErrorKind::VirtualInput, "negative multiplicity has no cell interpretation");
    for (int w = -k.two_jl; w <= k.two_jl; w += 2) out.add(w - k.two_jr, k.two_jr + 1, m);
  }
  return out;
}

GradedNilpotent realize_right_action(const BispinContent& v) {
  struct Vec {
    int degree;
    std::size_t index;
  };
  std::map<int, std::size_t> dims;
  // (degree, index) of source, (degree + 2, index) of target, coefficient.
  struct Entry {
    int degree;
    std::size_t src;
    std::size_t dst;
    int coeff;
  };
  std::vector<Entry> entries;
  for (const auto& [k, m] : v.entries()) {
    if (sgn(m) < 0) fail(ErrorKind::VirtualInput, "negative multiplicity cannot be realized");
    unsigned long copies = m.get_ui();
    for (unsigned long c = 0; c < copies; ++c) {
      for (int wl = -k.two_jl; wl <= k.two_jl; wl += 2) {
        Vec prev{0, 0};
        for (int wr = -k.two_jr; wr <= k.two_jr; wr += 2) {
          Vec cur{wl + wr, dims[wl + wr]++};
          if (wr > -k.two_jr) {
            // e v_i = (n - i + 1) v_{i-1} on the basis of weight n - 2i.
            int i = (k.two_jr - (wr - 2)) / 2;
            entries.push_back({prev.degree, prev.index, cur.index, k.two_jr - i + 1});
          }
          prev = cur;
        }
      }
    }
  }
  std::map<int, Matrix> maps;
  for (const auto& e : entries) {
    auto it = maps.find(e.degree);
    if (it == maps.end()) it = maps.emplace(e.degree, Matrix(dims[e.degree + 2], dims[e.degree])).first;
    it->second(e.dst, e.src) = e.coeff;
  }
  return GradedNilpotent(std::move(dims), std::move(maps));
}

BigInt alt_ng(const JordanCensus& census, int g) {
  if (g < 0) fail(ErrorKind::InvalidArgument, "negative genus");
  BigInt total = 0;
  for (const auto& [cell, nu] : census.entries()) {
    const std::int64_t a = cell.alpha;
    const std::int64_t l = cell.length;
    if (a + l < 1) continue;
    BigInt bracket = binomial(a + l + g, 2 * g + 1) - binomial(a + l + g - 2, 2 * g + 1);
    BigInt term = nu * l * bracket;
    if (((a + g) % 2 + 2) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

LaurentPoly census_polynomial(const JordanCensus& census) {
  LaurentPoly p;
  for (const auto& [cell, nu] : census.entries()) p.add_term(Monomial{cell.alpha, cell.length - 1}, nu);
  return p;
}

JordanCensus census_from_polynomial(const LaurentPoly& p) {
  JordanCensus out;
  for (const auto& [m, c] : p.terms()) out.add(static_cast<int>(m.t), static_cast<int>(m.s + 1), c);
  return out;
}

LaurentPoly clebsch_gordan_product(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      const std::int64_t lx = mx.s + 1;
      const std::int64_t ly = my.s + 1;
      const std::int64_t centre = (mx.t + mx.s) + (my.t + my.s);
      BigInt c = cx * cy;
      for (std::int64_t l = std::abs(lx - ly) + 1; l <= lx + ly - 1; l += 2) {
        out.add_term(Monomial{centre - (l - 1), l - 1}, c);
      }
    }
  }
  return out;
}

}  // namespace gvmot::lefschetz
