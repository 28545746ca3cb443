// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <utility>

#include "gvmot/lefschetz/sl2.hpp"

namespace gvmot::lefschetz {

/// Doubled left and right spins of an (sl2)_L x (sl2)_R irreducible.
struct BispinKey {
  int two_jl = 0;
  int two_jr = 0;
  auto operator<=>(const BispinKey&) const = default;
};

/// (sl2)_L x (sl2)_R module, sum of m * (j_L) (x) (j_R). Virtual entries allowed.
class BispinContent {
 public:
  BispinContent() = default;
  BispinContent(std::initializer_list<std::pair<const BispinKey, BigInt>> init);

  void add(int two_jl, int two_jr, const BigInt& mult);
  BigInt multiplicity(int two_jl, int two_jr) const;
  const std::map<BispinKey, BigInt>& entries() const noexcept { return mult_; }
  bool is_zero() const noexcept { return mult_.empty(); }
  bool is_nonnegative() const;

  /// Left content of the right spin (j_R).
  SpinMultiset left_part(int two_jr) const;

  friend bool operator==(const BispinContent&, const BispinContent&) = default;

 private:
  std::map<BispinKey, BigInt> mult_;
};

/// L (x) R as a bispin module.
BispinContent outer(const SpinMultiset& left, const SpinMultiset& right);

/// The R_g(beta) of IH = sum_g I_g (x) R_g, keyed by genus. Only nonzero R_g
/// appear. Each left content is expanded in the I_g basis from the top spin
/// down; I_g has the single top spin g/2, so the solve is triangular.
std::map<int, SpinMultiset> hst_decompose(const BispinContent& v);

/// sum_j (-1)^{2j} (2j + 1) N_j over R_g = sum_j N_j (j).
BigInt hst_ng(const BispinContent& v, int g);

}  // namespace gvmot::lefschetz
