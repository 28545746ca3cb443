// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/stacks/stack_class.hpp"

#include "gvmot/error.hpp"

namespace gvmot::stacks {

StackClass StackClass::of(const motives::MotiveExpr& expr) { return StackClass({StackTerm{RationalFn(1), expr}}); }

StackClass& StackClass::operator+=(const StackClass& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

StackClass StackClass::scaled(const RationalFn& f) const {
  StackClass out = *this;
  for (auto& term : out.terms_) term.coeff *= f;
  return out;
}

StackClass quotient_by_special_group(const motives::MotiveExpr& e, const motives::AbsMotive& group) {
  if (group.value.is_zero()) {
    fail(ErrorKind::ZeroGroupClass, "group '" + group.name + "' has zero class and cannot be divided by");
  }
  return StackClass::of(e).scaled(RationalFn(group.value).inverse());
}

StackClass scale_by_variety(const motives::AbsMotive& t, const StackClass& c) { return c.scaled(RationalFn(t.value)); }

RationalFn upsilon_stack(const StackClass& c) {
  RationalFn total;
  for (const auto& term : c.terms()) {
    if (term.coeff.is_zero()) continue;
    total += term.coeff * RationalFn(motives::upsilon_rel(term.expr));
  }
  return total;
}

}  // namespace gvmot::stacks
