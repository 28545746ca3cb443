// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>

#include "gvmot/algebra/laurent_poly.hpp"
#include "gvmot/algebra/matrix.hpp"
#include "gvmot/lefschetz/bispin.hpp"

namespace gvmot::lefschetz {

/// A Jordan cell: a string v, e v, ..., e^{length-1} v starting in degree alpha.
struct Cell {
  int alpha = 0;
  int length = 1;
  auto operator<=>(const Cell&) const = default;
};

/// nu_l^alpha: number of Jordan cells of each (minimal degree, size).
/// Counts are nonnegative for geometric data; virtual counts are allowed
/// when the census is read off a polynomial.
class JordanCensus {
 public:
  JordanCensus() = default;
  JordanCensus(std::initializer_list<std::pair<const Cell, BigInt>> init);

  void add(int alpha, int length, const BigInt& count);
  BigInt count(int alpha, int length) const;
  const std::map<Cell, BigInt>& entries() const noexcept { return cells_; }
  bool is_zero() const noexcept { return cells_.empty(); }
  bool is_nonnegative() const;

  /// sum of l * nu_l^alpha.
  BigInt total_dimension() const;

  friend bool operator==(const JordanCensus&, const JordanCensus&) = default;

 private:
  std::map<Cell, BigInt> cells_;
};

/// Graded space with a degree +2 operator, V_alpha -> V_{alpha+2}.
///
/// The operator in degree alpha is a dim(alpha+2) x dim(alpha) matrix acting
/// on column vectors; missing maps are zero. Raising the degree on a finitely
/// supported grading makes the operator nilpotent.
class GradedNilpotent {
 public:
  GradedNilpotent() = default;
  /// Throws ShapeMismatch when a map's shape disagrees with the grading.
  GradedNilpotent(std::map<int, std::size_t> dims, std::map<int, Matrix> maps);

  const std::map<int, std::size_t>& dims() const noexcept { return dims_; }
  const std::map<int, Matrix>& maps() const noexcept { return maps_; }
  std::size_t dim(int degree) const;

  /// The operator out of the given degree, zero if none was supplied.
  Matrix map_at(int degree) const;

  std::size_t total_dimension() const;

  /// Conjugates by degree-preserving invertible maps g_alpha: e -> g e g^{-1}.
  GradedNilpotent conjugate(const std::map<int, Matrix>& change) const;

 private:
  std::map<int, std::size_t> dims_;
  std::map<int, Matrix> maps_;
};

/// Cell census of a graded nilpotent operator from ranks of composed powers.
JordanCensus jordan_census(const GradedNilpotent& x);

/// Cells of the e_R strings under the grading h_L + h_R.
/// Throws VirtualInput for negative multiplicities.
JordanCensus census_from_bispin(const BispinContent& v);

/// An explicit e_R on a basis of weight vectors of v, graded by h_L + h_R.
/// Throws VirtualInput for negative multiplicities.
GradedNilpotent realize_right_action(const BispinContent& v);

/// The closed formula
///   sum_{alpha+l>=1} (-1)^{alpha+g} l nu_l^alpha {C(alpha+l+g, 2g+1) - C(alpha+l+g-2, 2g+1)}
/// with C(n, k) = 0 unless 0 <= k <= n.
BigInt alt_ng(const JordanCensus& census, int g);

/// sum nu_l^alpha t^alpha s^{l-1}.
LaurentPoly census_polynomial(const JordanCensus& census);

/// Inverse of census_polynomial: t^a s^b with coefficient c gives nu_{b+1}^a = c.
JordanCensus census_from_polynomial(const LaurentPoly& p);

/// Tensor product of Jordan data written as polynomials: t^a s^b is a string
/// of length b + 1 from degree a, i.e. a right spin b/2 centred at a + b.
/// Strings combine by Clebsch-Gordan with centres added. Bilinear,
/// commutative and associative with unit 1; on s-free input it is the
/// ordinary product.
LaurentPoly clebsch_gordan_product(const LaurentPoly& x, const LaurentPoly& y);

}  // namespace gvmot::lefschetz
