// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gvmot/algebra/laurent_poly.hpp"
#include "gvmot/lefschetz/census.hpp"

namespace gvmot::motives {

/// Class of a variety over a point, recorded by its virtual Poincare
/// polynomial in t alone.
struct AbsMotive {
  LaurentPoly value;
  std::string name;

  /// Throws InvalidArgument if the value involves s.
  static AbsMotive from_poly(LaurentPoly value, std::string name = {});

  static AbsMotive point();
  /// The Lefschetz class t^2.
  static AbsMotive lefschetz();
  static AbsMotive affine(int n);
  static AbsMotive gm();
  /// prod_{k=0}^{n-1} (t^{2n} - t^{2k}).
  static AbsMotive gl(int n);

  /// m_degree / 2; throws for the zero class or an odd degree.
  int dimension() const;
};

/// Expression in the relative Grothendieck ring, evaluated by upsilon_rel.
///
/// Nodes are immutable and shared, so copies are cheap and evaluation of one
/// tree from several threads is safe. Dimensions are checked on construction
/// and raise DimMismatch. The empty variety is zero() and has no dimension.
class MotiveExpr {
 public:
  enum class Kind { Zero, Atom, Sum, Diff, IntScale, AbsProduct, ProjBundle, BlowUpRel, Fibration, FinitePush };

  MotiveExpr();

  static MotiveExpr zero();
  /// A relative class of dimension dim with the given cell census; cells
  /// must sit inside degrees [-dim, dim].
  static MotiveExpr atom(std::string name, int dim, lefschetz::JordanCensus census);
  static MotiveExpr sum(const MotiveExpr& a, const MotiveExpr& b);
  static MotiveExpr sum(std::vector<MotiveExpr> terms);
  static MotiveExpr diff(const MotiveExpr& a, const MotiveExpr& b);
  static MotiveExpr scale(const BigInt& n, const MotiveExpr& e);
  static MotiveExpr product(const AbsMotive& factor, const MotiveExpr& e);
  /// Projective bundle with fibre P^{r-1}, r >= 1.
  static MotiveExpr proj_bundle(const MotiveExpr& base, int r);
  /// Blow-up of ambient along a centre of codimension r >= 1.
  static MotiveExpr blowup(const MotiveExpr& ambient, const MotiveExpr& center, int r);
  static MotiveExpr fibration(const MotiveExpr& base, const AbsMotive& fibre);
  static MotiveExpr finite_push(const MotiveExpr& e);

  Kind kind() const;
  std::optional<int> dim() const;
  const std::string& name() const;
  const lefschetz::JordanCensus& census() const;
  const std::vector<MotiveExpr>& children() const;
  const BigInt& scalar() const;
  const AbsMotive& factor() const;
  int rank() const;

  /// Number of nodes in the tree.
  std::size_t size() const;

 private:
  friend LaurentPoly upsilon_rel(const MotiveExpr& e);
  struct Node;
  explicit MotiveExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// The measure on relative classes:
///   atom          t^dim sum nu_l^alpha t^alpha s^{l-1}
///   sum/diff/scale linear
///   product/fibration multiply by the absolute class
///   proj_bundle   multiply by 1 + t^2 + ... + t^{2(r-1)}
///   blowup        value(ambient) + (t^2 + ... + t^{2(r-1)}) value(center)
///   finite_push   unchanged
LaurentPoly upsilon_rel(const MotiveExpr& e);

/// A smooth projective variety mapping to itself, from its Betti numbers
/// b_0..b_{2d}. Throws NotDualitySymmetric or NotHardLefschetz.
MotiveExpr smooth_from_betti(const std::vector<BigInt>& bettis, std::string name = "X");

/// A smooth projective variety over a point: all cells have length one and
/// the value is sum b_i t^i. Throws NotDualitySymmetric.
MotiveExpr point_base_from_betti(const std::vector<BigInt>& bettis, std::string name = "X");

LaurentPoly projective_bundle_value(const MotiveExpr& base, int r);

/// Checks value(blow-up) - value(exceptional divisor) = value(ambient) - value(center)
/// with the exceptional divisor a P^{r-1}-bundle over the centre.
bool blowup_relation_check(const MotiveExpr& ambient, const MotiveExpr& center, int r);

/// True for trees built from nonnegative atoms whose cells reach degree dim,
/// combined without differences, non-positive scalars or absolute factors
/// with a negative leading coefficient.
bool is_geometric(const MotiveExpr& e);

}  // namespace gvmot::motives
