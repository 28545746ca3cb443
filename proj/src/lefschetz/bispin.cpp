// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/lefschetz/bispin.hpp"

#include <algorithm>
#include <vector>

#include "gvmot/error.hpp"

namespace gvmot::lefschetz {

BispinContent::BispinContent(std::initializer_list<std::pair<const BispinKey, BigInt>> init) {
  for (const auto& [k, m] : init) add(k.two_jl, k.two_jr, m);
}

void BispinContent::add(int two_jl, int two_jr, const BigInt& mult) {
  if (two_jl < 0 || two_jr < 0) fail(ErrorKind::InvalidArgument, "negative spin");
  if (sgn(mult) == 0) return;
  auto [it, inserted] = mult_.try_emplace(BispinKey{two_jl, two_jr}, mult);
  if (!inserted) {
    it->second += mult;
    if (sgn(it->second) == 0) mult_.erase(it);
  }
}

BigInt BispinContent::multiplicity(int two_jl, int two_jr) const {
  auto it = mult_.find(BispinKey{two_jl, two_jr});
  return it == mult_.end() ? BigInt(0) : it->second;
}

bool BispinContent::is_nonnegative() const {
  return std::all_of(mult_.begin(), mult_.end(), [](const auto& kv) { return sgn(kv.second) > 0; });
}

SpinMultiset BispinContent::left_part(int two_jr) const {
  SpinMultiset out;
  for (const auto& [k, m] : mult_) {
    if (k.two_jr == two_jr) out.add(k.two_jl, m);
  }
  return out;
}

BispinContent outer(const SpinMultiset& left, const SpinMultiset& right) {
  BispinContent out;
  for (const auto& [a, ma] : left.entries()) {
    for (const auto& [b, mb] : right.entries()) out.add(a, b, ma * mb);
  }
  return out;
}

std::map<int, SpinMultiset> hst_decompose(const BispinContent& v) {
  std::vector<int> right_spins;
  int top_left = -1;
  for (const auto& [k, m] : v.entries()) {
    if (right_spins.empty() || right_spins.back() != k.two_jr) right_spins.push_back(k.two_jr);
    top_left = std::max(top_left, k.two_jl);
  }
  std::sort(right_spins.begin(), right_spins.end());
  right_spins.erase(std::unique(right_spins.begin(), right_spins.end()), right_spins.end());

  std::vector<SpinMultiset> basis;
  for (int g = 0; g <= top_left; ++g) basis.push_back(i_g(g));

  std::map<int, SpinMultiset> out;
  for (int two_jr : right_spins) {
    SpinMultiset rest = v.left_part(two_jr);
    while (!rest.is_zero()) {
      int g = rest.top_two_j();
      BigInt c = rest.multiplicity(g);
      rest -= basis[static_cast<std::size_t>(g)] * c;
      out[g].add(two_jr, c);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

BigInt hst_ng(const BispinContent& v, int g) {
  if (g < 0) fail(ErrorKind::InvalidArgument, "negative genus");
  auto decomposition = hst_decompose(v);
  auto it = decomposition.find(g);
  if (it == decomposition.end()) return 0;
  BigInt total = 0;
  for (const auto& [two_j, n] : it->second.entries()) {
    BigInt term = n * (two_j + 1);
    if (two_j % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace gvmot::lefschetz
