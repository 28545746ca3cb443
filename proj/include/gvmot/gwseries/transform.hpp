// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <vector>

#include "gvmot/algebra/numbers.hpp"
#include "gvmot/counting/lattice.hpp"

namespace gvmot::gw {

using counting::CurveClass;

/// Integer BPS numbers n_g^beta with their cutoffs. Degrees are measured by
/// the functional omega.
struct GVTable {
  struct Key {
    int genus = 0;
    CurveClass beta;
    auto operator<=>(const Key&) const = default;
  };

  std::vector<BigRational> omega;
  int genus_max = 0;
  BigRational degree_cut = 0;
  std::map<Key, BigInt> entries;

  BigInt at(int genus, const CurveClass& beta) const;
  /// Adds n to the entry, dropping it when the sum is zero.
  void add(int genus, const CurveClass& beta, const BigInt& n);
};

/// Truncated sum of N^beta_e q^beta lambda^e with e >= -2 and even.
struct GWSeries {
  struct Key {
    CurveClass beta;
    int lambda_exp = 0;
    auto operator<=>(const Key&) const = default;
  };

  std::vector<BigRational> omega;
  BigRational degree_cut = 0;
  int lambda_cut = 0;
  std::map<Key, BigRational> coeffs;

  BigRational at(const CurveClass& beta, int lambda_exp) const;
  void add(const CurveClass& beta, int lambda_exp, const BigRational& c);
};

/// c_m with (2 sin(x/2))^{2g-2} = sum_{m>=0} c_m x^{2g-2+2m}, for m <= order.
std::vector<BigRational> two_sin_power_coefficients(int g, int order);

/// sum_{beta,g,k} n_g^beta / k (2 sin(k lambda/2))^{2g-2} q^{k beta}, keeping
/// omega-degree <= degree_cut and lambda exponents <= lambda_cut. Throws
/// ConeNotPointed when a class with a nonzero entry has omega-degree <= 0.
GWSeries gv_to_gw(const GVTable& table, const BigRational& degree_cut, int lambda_cut);

struct NonIntegralEntry {
  int genus = 0;
  CurveClass beta;
  BigRational value;
};

struct GVSolve {
  GVTable table;
  /// Solved values that are not integers; they are kept out of the table.
  std::vector<NonIntegralEntry> non_integral;
};

/// Inverts gv_to_gw class by class, ordered by omega-degree then
/// lexicographically, and by genus within a class. Throws
/// InsufficientTruncation when 2 genus_max - 2 exceeds the series lambda
/// cut, and NonIntegral on a fractional value when strict is set.
GVSolve gw_to_gv(const GWSeries& series, int genus_max, bool strict = false);

}  // namespace gvmot::gw
