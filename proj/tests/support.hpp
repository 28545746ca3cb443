// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

// Small helpers shared by the unit tests.

#pragma once

#include <array>
#include <random>
#include <vector>

#include "gvmot/algebra/laurent_poly.hpp"

namespace gvmot::testing {

inline LaurentPoly T(std::int64_t e) { return LaurentPoly::t(e); }
inline LaurentPoly S(std::int64_t e) { return LaurentPoly::s(e); }
inline LaurentPoly C(long c) { return LaurentPoly(BigInt(c)); }

/// Builds c t^a s^b summed over the given triples.
inline LaurentPoly poly(std::initializer_list<std::array<long, 3>> terms) {
  LaurentPoly p;
  for (const auto& [a, b, c] : terms) p += LaurentPoly::monomial(BigInt(c), a, b);
  return p;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int terms, int max_abs_t, int max_s, int max_coeff) {
  std::uniform_int_distribution<int> te(-max_abs_t, max_abs_t), se(0, max_s), ce(-max_coeff, max_coeff);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(BigInt(ce(rng)), te(rng), se(rng));
  return p;
}

}  // namespace gvmot::testing
