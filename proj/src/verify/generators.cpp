// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/verify/generators.hpp"

#include <algorithm>

#include "gvmot/error.hpp"

namespace gvmot::verify {

using counting::CurveClass;
using counting::NumClass;
using motives::AbsMotive;
using motives::MotiveExpr;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

lefschetz::BispinContent random_bispin(Rng& rng, int max_two_j, int max_mult, int max_terms, bool virtual_ok) {
  lefschetz::BispinContent v;
  const auto terms = uniform(rng, 1, max_terms);
  for (std::int64_t i = 0; i < terms; ++i) {
    auto jl = static_cast<int>(uniform(rng, 0, max_two_j));
    auto jr = static_cast<int>(uniform(rng, 0, max_two_j));
    auto m = virtual_ok ? uniform(rng, -max_mult, max_mult) : uniform(rng, 1, max_mult);
    v.add(jl, jr, BigInt(static_cast<long>(m)));
  }
  return v;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  // Unit lower times unit upper triangular, then a random row permutation.
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = static_cast<long>(uniform(rng, -2, 2));
    for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = static_cast<long>(uniform(rng, -2, 2));
    upper(i, i) = BigRational(uniform(rng, 0, 1) ? 1 : -1) * static_cast<long>(uniform(rng, 1, 3));
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return p * lower * upper;
}

std::map<int, Matrix> random_basis_change(Rng& rng, const lefschetz::GradedNilpotent& x) {
  std::map<int, Matrix> out;
  for (const auto& [deg, d] : x.dims()) out.emplace(deg, random_invertible(rng, d));
  return out;
}

MotiveExpr random_geometric_atom(Rng& rng, int max_dim) {
  lefschetz::BispinContent v;
  const auto terms = uniform(rng, 1, 3);
  int dim = 0;
  for (std::int64_t i = 0; i < terms; ++i) {
    auto total = static_cast<int>(uniform(rng, 0, max_dim));
    auto jl = static_cast<int>(uniform(rng, 0, total));
    v.add(jl, total - jl, BigInt(static_cast<long>(uniform(rng, 1, 3))));
    dim = std::max(dim, total);
  }
  return MotiveExpr::atom("A", dim, lefschetz::census_from_bispin(v));
}

MotiveExpr raise_dimension(const MotiveExpr& e, int target) {
  if (!e.dim() || *e.dim() >= target) return e;
  return MotiveExpr::proj_bundle(e, target - *e.dim() + 1);
}

namespace {

AbsMotive random_factor(Rng& rng) {
  switch (uniform(rng, 0, 4)) {
    case 0:
      return AbsMotive::affine(static_cast<int>(uniform(rng, 0, 2)));
    case 1:
      return AbsMotive::gm();
    case 2:
      return AbsMotive::gl(static_cast<int>(uniform(rng, 1, 2)));
    case 3:
      return AbsMotive::lefschetz();
    default:
      return AbsMotive::point();
  }
}

}  // namespace

MotiveExpr random_geometric_tree(Rng& rng, int depth) {
  if (depth <= 0) return random_geometric_atom(rng, 3);
  auto sub = [&] { return random_geometric_tree(rng, static_cast<int>(uniform(rng, 0, depth - 1))); };
  switch (uniform(rng, 0, 7)) {
    case 0:
      return MotiveExpr::sum(sub(), sub());
    case 1:
      return MotiveExpr::scale(BigInt(static_cast<long>(uniform(rng, 1, 3))), sub());
    case 2:
      return MotiveExpr::product(random_factor(rng), sub());
    case 3:
      return MotiveExpr::proj_bundle(sub(), static_cast<int>(uniform(rng, 1, 3)));
    case 4: {
      auto r = static_cast<int>(uniform(rng, 2, 3));
      auto center = sub();
      auto ambient = raise_dimension(sub(), *center.dim() + r);
      center = raise_dimension(center, *ambient.dim() - r);
      return MotiveExpr::blowup(ambient, center, r);
    }
    case 5:
      return MotiveExpr::fibration(sub(), uniform(rng, 0, 1) ? AbsMotive::gm() : AbsMotive::affine(1));
    case 6:
      return MotiveExpr::finite_push(sub());
    default:
      return random_geometric_atom(rng, 4);
  }
}

counting::CountingSetup random_setup(Rng& rng, int max_rank, bool zero_b) {
  const auto rank = static_cast<std::size_t>(uniform(rng, 1, max_rank));
  std::vector<CurveClass> generators;
  const auto count = uniform(rng, 1, static_cast<std::int64_t>(rank) + 1);
  for (std::size_t i = 0; i < rank; ++i) {
    CurveClass e(rank, 0);
    e[i] = 1;
    generators.push_back(e);
  }
  for (std::int64_t i = 0; i < count - 1; ++i) {
    CurveClass g(rank, 0);
    while (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) {
      for (auto& x : g) x = uniform(rng, 0, 2);
    }
    if (std::find(generators.begin(), generators.end(), g) == generators.end()) generators.push_back(g);
  }
  counting::CentralCharge charge;
  for (std::size_t i = 0; i < rank; ++i) {
    charge.omega.emplace_back(uniform(rng, 1, 3), uniform(rng, 1, 2));
    charge.omega.back().canonicalize();
    charge.b_field.emplace_back(zero_b ? 0 : uniform(rng, -2, 2), 2);
    charge.b_field.back().canonicalize();
  }
  return counting::CountingSetup(counting::ClassLattice(rank, std::move(generators)), std::move(charge));
}

NumClass random_effective_class(Rng& rng, const counting::CountingSetup& setup, int max_degree, int k_range) {
  const auto rank = setup.lattice().rank();
  if (uniform(rng, 0, 5) == 0) return NumClass{CurveClass(rank, 0), uniform(rng, 1, 3)};
  const auto& gens = setup.lattice().generators();
  const BigRational cap(max_degree);
  std::vector<const CurveClass*> small;
  for (const auto& g : gens) {
    if (setup.charge().degree(g) <= cap) small.push_back(&g);
  }
  if (small.empty()) {
    small.push_back(&*std::min_element(gens.begin(), gens.end(), [&](const auto& a, const auto& b) {
      return setup.charge().degree(a) < setup.charge().degree(b);
    }));
  }
  CurveClass beta(rank, 0);
  const auto steps = uniform(rng, 1, 4);
  for (std::int64_t i = 0; i < steps; ++i) {
    const CurveClass& g = *small[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(small.size()) - 1))];
    CurveClass next = beta;
    for (std::size_t j = 0; j < rank; ++j) next[j] += g[j];
    if (i > 0 && setup.charge().degree(next) > cap) break;
    beta = std::move(next);
  }
  return NumClass{beta, uniform(rng, -k_range, k_range)};
}

counting::EvalModel random_eval_model(Rng& rng, const std::vector<NumClass>& classes) {
  std::map<NumClass, stacks::StackClass> atoms;
  const RationalFn gm_inverse = RationalFn(AbsMotive::gm().value).inverse();
  for (const auto& v : classes) {
    stacks::StackClass c;
    const auto terms = uniform(rng, 1, 2);
    for (std::int64_t i = 0; i < terms; ++i) {
      RationalFn coeff = uniform(rng, 0, 1) ? gm_inverse : RationalFn(static_cast<int>(uniform(rng, 1, 3)));
      c += stacks::StackClass({stacks::StackTerm{coeff, random_geometric_atom(rng, 2)}});
    }
    atoms.emplace(v, std::move(c));
  }
  std::vector<counting::ExtDefectEntry> ext;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i; j < classes.size(); ++j) {
      BigInt e(static_cast<long>(uniform(rng, -2, 2)));
      ext.push_back({classes[i], classes[j], e});
      if (i != j) ext.push_back({classes[j], classes[i], e});
    }
  }
  return counting::EvalModel(std::move(atoms), ext, uniform(rng, 0, 3) == 0 ? counting::Combinator::Product
                                                                            : counting::Combinator::ClebschGordan);
}

gw::GVTable random_gv_table(Rng& rng, int max_degree, int max_genus) {
  gw::GVTable t;
  const auto rank = static_cast<std::size_t>(uniform(rng, 1, 2));
  for (std::size_t i = 0; i < rank; ++i) t.omega.emplace_back(uniform(rng, 1, 2));
  t.genus_max = max_genus;
  t.degree_cut = max_degree;
  const auto entries = uniform(rng, 1, 6);
  for (std::int64_t i = 0; i < entries; ++i) {
    CurveClass beta(rank, 0);
    BigRational d = 0;
    while (d == 0) {
      for (std::size_t j = 0; j < rank; ++j) beta[j] = uniform(rng, 0, max_degree);
      d = 0;
      for (std::size_t j = 0; j < rank; ++j) d += t.omega[j] * static_cast<long>(beta[j]);
      if (d > max_degree) d = 0;
    }
    t.add(static_cast<int>(uniform(rng, 0, max_genus)), beta, BigInt(static_cast<long>(uniform(rng, -5, 5))));
  }
  return t;
}

}  // namespace gvmot::verify
