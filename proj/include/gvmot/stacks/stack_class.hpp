// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "gvmot/algebra/rational_fn.hpp"
#include "gvmot/motives/motive.hpp"

namespace gvmot::stacks {

struct StackTerm {
  RationalFn coeff;
  motives::MotiveExpr expr;
};

/// Formal combination sum coeff_i [expr_i] with coefficients in Q(t, s).
/// Addition is concatenation; the empty list is zero.
class StackClass {
 public:
  StackClass() = default;
  explicit StackClass(std::vector<StackTerm> terms) : terms_(std::move(terms)) {}
  /// The class [expr] with coefficient 1.
  static StackClass of(const motives::MotiveExpr& expr);

  const std::vector<StackTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  StackClass& operator+=(const StackClass& o);
  friend StackClass operator+(StackClass a, const StackClass& b) { return a += b; }

  /// Multiplies every coefficient by f.
  StackClass scaled(const RationalFn& f) const;

 private:
  std::vector<StackTerm> terms_;
};

/// [X/G] = value(G)^{-1} [X]. Throws ZeroGroupClass when value(G) = 0.
StackClass quotient_by_special_group(const motives::MotiveExpr& e, const motives::AbsMotive& group);

/// value(T) * c.
StackClass scale_by_variety(const motives::AbsMotive& t, const StackClass& c);

/// sum coeff_i * upsilon_rel(expr_i).
RationalFn upsilon_stack(const StackClass& c);

}  // namespace gvmot::stacks
