// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>

#include "gvmot/algebra/numbers.hpp"

namespace gvmot::lefschetz {

/// Dimensions of a Z-graded vector space, degree -> dim. Absent degrees are 0.
using GradedDims = std::map<int, BigInt>;

/// Virtual sl2 representation: spin j (keyed by 2j) -> multiplicity.
///
/// Spins are doubled so that half-integers stay integral. Multiplicities may
/// be negative; zero multiplicities are never stored.
class SpinMultiset {
 public:
  SpinMultiset() = default;
  SpinMultiset(std::initializer_list<std::pair<const int, BigInt>> init);

  /// The irreducible (j) with multiplicity one.
  static SpinMultiset irreducible(int two_j) { return SpinMultiset{{two_j, BigInt(1)}}; }

  void add(int two_j, const BigInt& mult);
  BigInt multiplicity(int two_j) const;
  const std::map<int, BigInt>& entries() const noexcept { return mult_; }
  bool is_zero() const noexcept { return mult_.empty(); }
  bool is_nonnegative() const;

  /// Largest 2j with a nonzero multiplicity; requires !is_zero().
  int top_two_j() const;

  /// Sum of mult * (2j + 1).
  BigInt dimension() const;

  /// Weight multiplicities; negative entries are possible for virtual input.
  GradedDims character() const;

  SpinMultiset& operator+=(const SpinMultiset& o);
  SpinMultiset& operator-=(const SpinMultiset& o);
  SpinMultiset& operator*=(const BigInt& k);
  friend SpinMultiset operator+(SpinMultiset a, const SpinMultiset& b) { return a += b; }
  friend SpinMultiset operator-(SpinMultiset a, const SpinMultiset& b) { return a -= b; }
  friend SpinMultiset operator*(SpinMultiset a, const BigInt& k) { return a *= k; }
  friend bool operator==(const SpinMultiset&, const SpinMultiset&) = default;

 private:
  std::map<int, BigInt> mult_;
};

/// Decomposes a graded space carrying a Lefschetz-type action into spins:
/// mult(j) = dim(-2j) - dim(-2j - 2). Throws NotRepresentation unless the
/// dimensions are nonnegative, symmetric and unimodal within each parity.
SpinMultiset spin_decompose(const GradedDims& dims);

/// Clebsch-Gordan tensor product, extended bilinearly to virtual input.
SpinMultiset tensor(const SpinMultiset& x, const SpinMultiset& y);

/// I_g = [(1/2) + 2(0)]^{(x) g}, the cohomology of a g-dimensional torus.
SpinMultiset i_g(int g);

}  // namespace gvmot::lefschetz
