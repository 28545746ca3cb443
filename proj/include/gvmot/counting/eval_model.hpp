// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gvmot/algebra/rational_fn.hpp"
#include "gvmot/counting/hall.hpp"
#include "gvmot/stacks/stack_class.hpp"

namespace gvmot::counting {

/// How the values of the summands of a direct sum combine.
enum class Combinator {
  /// Jordan data of the summands tensored (lefschetz::clebsch_gordan_product).
  ClebschGordan,
  /// Plain polynomial product.
  Product,
};

struct ExtDefectEntry {
  NumClass first;
  NumClass second;
  BigInt value;
};

/// Split-stratum evaluation of words: a word v_1 ... v_n evaluates to
///   L^{sum_{i<j} e(v_i, v_j)} * combine(value(atom v_1), ..., value(atom v_n))
/// with L = t^2, and the evaluation is extended linearly. The defect table e
/// must be symmetric; absent pairs are 0.
class EvalModel {
 public:
  /// Throws AsymmetricExtDefect if e(v1, v2) != e(v2, v1) for some pair.
  EvalModel(std::map<NumClass, stacks::StackClass> atoms, const std::vector<ExtDefectEntry>& ext_defect,
            Combinator combinator = Combinator::ClebschGordan);

  const std::map<NumClass, stacks::StackClass>& atoms() const noexcept { return atoms_; }
  Combinator combinator() const noexcept { return combinator_; }
  bool has_atom(const NumClass& v) const { return atoms_.contains(v); }

  BigInt ext_defect(const NumClass& a, const NumClass& b) const;

  /// The atom of v as (coefficient, value) pairs; throws MissingAtom.
  const std::vector<std::pair<RationalFn, LaurentPoly>>& atom_terms(const NumClass& v) const;

 private:
  std::map<NumClass, stacks::StackClass> atoms_;
  std::map<NumClass, std::vector<std::pair<RationalFn, LaurentPoly>>> atom_terms_;
  std::map<std::pair<NumClass, NumClass>, BigInt> ext_;
  Combinator combinator_;
};

RationalFn eval_word(const Word& w, const EvalModel& m);
RationalFn eval(const FreeHallElement& f, const EvalModel& m);

/// (L - 1) eval(eps(v)) for effective v, the value at -v when -v is
/// effective, and 0 otherwise.
RationalFn p_of_v(const CountingSetup& setup, const NumClass& v, const EvalModel& m);

/// Reads the cell census off flat(p) and applies the closed genus formula.
/// Throws NotPolynomial or OddMDegree.
BigInt ng_from_p(const RationalFn& p, int g);

}  // namespace gvmot::counting
