// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/lefschetz/sl2.hpp"

#include <algorithm>
#include <cstdlib>

#include "gvmot/error.hpp"

namespace gvmot::lefschetz {

SpinMultiset::SpinMultiset(std::initializer_list<std::pair<const int, BigInt>> init) {
  for (const auto& [two_j, m] : init) add(two_j, m);
}

void SpinMultiset::add(int two_j, const BigInt& mult) {
  if (two_j < 0) fail(ErrorKind::InvalidArgument, "negative spin");
  if (sgn(mult) == 0) return;
  auto [it, inserted] = mult_.try_emplace(two_j, mult);
  if (!inserted) {
    it->second += mult;
    if (sgn(it->second) == 0) mult_.erase(it);
  }
}

BigInt SpinMultiset::multiplicity(int two_j) const {
  auto it = mult_.find(two_j);
  return it == mult_.end() ? BigInt(0) : it->second;
}

bool SpinMultiset::is_nonnegative() const {
  return std::all_of(mult_.begin(), mult_.end(), [](const auto& kv) { return sgn(kv.second) > 0; });
}

int SpinMultiset::top_two_j() const {
  if (mult_.empty()) fail(ErrorKind::InvalidArgument, "top spin of the zero representation");
  return mult_.rbegin()->first;
}

BigInt SpinMultiset::dimension() const {
  BigInt d = 0;
  for (const auto& [two_j, m] : mult_) d += m * (two_j + 1);
  return d;
}

GradedDims SpinMultiset::character() const {
  GradedDims out;
  for (const auto& [two_j, m] : mult_) {
    for (int w = -two_j; w <= two_j; w += 2) {
      BigInt& slot = out[w];
      slot += m;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

SpinMultiset& SpinMultiset::operator+=(const SpinMultiset& o) {
  for (const auto& [two_j, m] : o.mult_) add(two_j, m);
  return *this;
}

SpinMultiset& SpinMultiset::operator-=(const SpinMultiset& o) {
  for (const auto& [two_j, m] : o.mult_) add(two_j, -m);
  return *this;
}

SpinMultiset& SpinMultiset::operator*=(const BigInt& k) {
  if (sgn(k) == 0) {
    mult_.clear();
    return *this;
  }
  for (auto& [two_j, m] : mult_) m *= k;
  return *this;
}

SpinMultiset spin_decompose(const GradedDims& dims) {
  auto dim_at = [&](int d) {
    auto it = dims.find(d);
    return it == dims.end() ? BigInt(0) : it->second;
  };
  int top = 0;
  for (const auto& [deg, dim] : dims) {
    if (sgn(dim) < 0) fail(ErrorKind::NotRepresentation, "negative dimension in degree " + std::to_string(deg));
    if (sgn(dim) == 0) continue;
    if (dim_at(-deg) != dim) fail(ErrorKind::NotRepresentation, "dimensions not symmetric in degree " + std::to_string(deg));
    top = std::max(top, std::abs(deg));
  }
  SpinMultiset out;
  for (int k = 0; k <= top; ++k) {
    BigInt diff = dim_at(k) - dim_at(k + 2);
    if (sgn(diff) < 0) fail(ErrorKind::NotRepresentation, "dimensions not unimodal at degree " + std::to_string(k));
    out.add(k, diff);
  }
  return out;
}

SpinMultiset tensor(const SpinMultiset& x, const SpinMultiset& y) {
  SpinMultiset out;
  for (const auto& [a, ma] : x.entries()) {
    for (const auto& [b, mb] : y.entries()) {
      BigInt m = ma * mb;
      for (int c = std::abs(a - b); c <= a + b; c += 2) out.add(c, m);
    }
  }
  return out;
}

SpinMultiset i_g(int g) {
  if (g < 0) fail(ErrorKind::InvalidArgument, "negative genus");
  const SpinMultiset base{{1, BigInt(1)}, {0, BigInt(2)}};
  SpinMultiset out = SpinMultiset::irreducible(0);
  for (int i = 0; i < g; ++i) out = tensor(out, base);
  return out;
}

}  // namespace gvmot::lefschetz
