// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gvmot/counting/eval_model.hpp"
#include "gvmot/gwseries/transform.hpp"
#include "gvmot/lefschetz/census.hpp"
#include "gvmot/motives/motive.hpp"

namespace gvmot::verify {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Up to max_terms entries with 2j <= max_two_j and multiplicities in
/// [1, max_mult], or in [-max_mult, max_mult] when virtual_ok.
lefschetz::BispinContent random_bispin(Rng& rng, int max_two_j, int max_mult, int max_terms, bool virtual_ok);

/// Random square invertible matrix with small integer entries.
Matrix random_invertible(Rng& rng, std::size_t n);

/// Degree-preserving invertible maps for every degree of x.
std::map<int, Matrix> random_basis_change(Rng& rng, const lefschetz::GradedNilpotent& x);

/// Atom realizing a nonnegative bispin content with its cells centred in
/// [-dim, dim].
motives::MotiveExpr random_geometric_atom(Rng& rng, int max_dim);

/// Expression tree of the given depth assembled from geometric atoms.
motives::MotiveExpr random_geometric_tree(Rng& rng, int depth);

/// Pads e with projective bundles until its dimension reaches target.
motives::MotiveExpr raise_dimension(const motives::MotiveExpr& e, int target);

/// Rank in [1, max_rank], nonnegative nonzero generators, omega positive on
/// them and a small B-field; B = 0 when zero_b.
counting::CountingSetup random_setup(Rng& rng, int max_rank, bool zero_b);

/// Effective class of omega-degree at most max_degree.
counting::NumClass random_effective_class(Rng& rng, const counting::CountingSetup& setup, int max_degree,
                                          int k_range);

/// Atoms for each class in classes and a random symmetric defect table.
counting::EvalModel random_eval_model(Rng& rng, const std::vector<counting::NumClass>& classes);

/// Random integer GV table, omega-degree <= max_degree and genus <= max_genus.
gw::GVTable random_gv_table(Rng& rng, int max_degree, int max_genus);

}  // namespace gvmot::verify
