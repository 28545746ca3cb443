// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/counting/eval_model.hpp"

#include "gvmot/error.hpp"
#include "gvmot/lefschetz/census.hpp"

namespace gvmot::counting {

EvalModel::EvalModel(std::map<NumClass, stacks::StackClass> atoms, const std::vector<ExtDefectEntry>& entries,
                     Combinator combinator)
    : atoms_(std::move(atoms)), combinator_(combinator) {
  for (const auto& [v, c] : atoms_) {
    auto& terms = atom_terms_[v];
    for (const auto& term : c.terms()) {
      if (!term.coeff.is_zero()) terms.emplace_back(term.coeff, motives::upsilon_rel(term.expr));
    }
  }
  for (const auto& e : entries) {
    auto [it, inserted] = ext_.try_emplace({e.first, e.second}, e.value);
    if (!inserted && it->second != e.value) {
      fail(ErrorKind::AsymmetricExtDefect, "conflicting entries for (" + to_key(e.first) + ", " + to_key(e.second) + ")");
    }
  }
  for (const auto& [pair, value] : ext_) {
    if (ext_defect(pair.second, pair.first) != value) {
      fail(ErrorKind::AsymmetricExtDefect,
           "e(" + to_key(pair.first) + ", " + to_key(pair.second) + ") = " + value.get_str() + " but e(" +
               to_key(pair.second) + ", " + to_key(pair.first) + ") = " + ext_defect(pair.second, pair.first).get_str());
    }
  }
}

BigInt EvalModel::ext_defect(const NumClass& a, const NumClass& b) const {
  auto it = ext_.find({a, b});
  return it == ext_.end() ? BigInt(0) : it->second;
}

const std::vector<std::pair<RationalFn, LaurentPoly>>& EvalModel::atom_terms(const NumClass& v) const {
  auto it = atom_terms_.find(v);
  if (it == atom_terms_.end()) fail(ErrorKind::MissingAtom, "no atom for class " + to_key(v));
  return it->second;
}

RationalFn eval_word(const Word& w, const EvalModel& m) {
  BigInt exponent = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) exponent += m.ext_defect(w[i], w[j]);
  }
  // Partial expansions of the product over letters, one entry per choice of terms.
  std::vector<std::pair<RationalFn, LaurentPoly>> partial{{RationalFn(1), LaurentPoly(1)}};
  for (const auto& letter : w) {
    const auto& terms = m.atom_terms(letter);
    std::vector<std::pair<RationalFn, LaurentPoly>> next;
    next.reserve(partial.size() * terms.size());
    for (const auto& [pc, pv] : partial) {
      for (const auto& [tc, tv] : terms) {
        LaurentPoly value =
            m.combinator() == Combinator::ClebschGordan ? lefschetz::clebsch_gordan_product(pv, tv) : pv * tv;
        next.emplace_back(pc * tc, std::move(value));
      }
    }
    partial = std::move(next);
  }
  RationalFn total;
  for (const auto& [c, v] : partial) total += c * RationalFn(v);
  if (!exponent.fits_slong_p()) fail(ErrorKind::ResourceLimit, "ext defect exponent out of range");
  return total * RationalFn(LaurentPoly::t(2 * exponent.get_si()));
}

RationalFn eval(const FreeHallElement& f, const EvalModel& m) {
  RationalFn total;
  for (const auto& [w, c] : f.terms()) total += RationalFn(c) * eval_word(w, m);
  return total;
}

RationalFn p_of_v(const CountingSetup& setup, const NumClass& v, const EvalModel& m) {
  if (setup.is_effective(v)) {
    return RationalFn(LaurentPoly::t(2) - LaurentPoly(1)) * eval(epsilon_formal(setup, v), m);
  }
  if (setup.is_effective(-v)) return p_of_v(setup, -v, m);
  return RationalFn();
}

BigInt ng_from_p(const RationalFn& p, int g) {
  auto poly = p.as_polynomial();
  if (!poly) fail(ErrorKind::NotPolynomial, "P = " + to_string(p) + " is not a polynomial");
  if (poly->is_zero()) return 0;
  return lefschetz::alt_ng(lefschetz::census_from_polynomial(flat(*poly)), g);
}

}  // namespace gvmot::counting
