// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gvmot/algebra/numbers.hpp"

namespace gvmot::counting {

using CurveClass = std::vector<std::int64_t>;

/// v = (beta, k): a curve class together with the Euler pairing.
struct NumClass {
  CurveClass beta;
  std::int64_t k = 0;

  bool beta_is_zero() const;

  NumClass operator-() const;
  friend NumClass operator+(const NumClass& a, const NumClass& b);
  friend NumClass operator-(const NumClass& a, const NumClass& b);
  auto operator<=>(const NumClass&) const = default;
};

/// "b1,b2,...;k".
std::string to_key(const NumClass& v);
/// Inverse of to_key; throws Schema on malformed text or a rank mismatch
/// when rank is given.
NumClass parse_class_key(std::string_view key, std::optional<std::size_t> rank = std::nullopt);

std::string to_key(const CurveClass& beta);

/// Effective-cone generators in Z^rank. Membership in the generated monoid
/// is decided by bounded search, with bounds taken from a positive functional.
class ClassLattice {
 public:
  ClassLattice() = default;
  /// Throws InvalidArgument for zero or wrongly sized generators.
  ClassLattice(std::size_t rank, std::vector<CurveClass> generators);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<CurveClass>& generators() const noexcept { return generators_; }

 private:
  std::size_t rank_ = 0;
  std::vector<CurveClass> generators_;
};

/// Z(v) = -k + (B + i omega) . beta.
struct CentralCharge {
  std::vector<BigRational> b_field;
  std::vector<BigRational> omega;

  BigRational re(const NumClass& v) const;
  BigRational im(const NumClass& v) const;
  /// omega . beta.
  BigRational degree(const CurveClass& beta) const;
};

/// Exact phase of a nonzero central charge value.
///
/// No angle is ever computed: phases are compared through the pair
/// (Re Z, Im Z), first by half-plane, (0, 1] before (1, 2], then by the sign
/// of the cross product.
class Phase {
 public:
  Phase(BigRational re, BigRational im);  // throws ZeroCharge at the origin

  const BigRational& re() const noexcept { return re_; }
  const BigRational& im() const noexcept { return im_; }

  /// True for phases in (0, 1].
  bool in_upper_half() const;

  /// The phase as a rational number, when it is one of 1/2, 1, 3/2, 2.
  std::optional<BigRational> exact_value() const;

  /// "1/2", "1", ... when exact, otherwise "arg(re + im i)/pi" with exact parts.
  std::string to_string() const;

  friend bool operator==(const Phase& a, const Phase& b);
  friend bool operator<(const Phase& a, const Phase& b);

 private:
  BigRational re_;
  BigRational im_;
};

Phase phase(const CentralCharge& z, const NumClass& v);

/// Lattice, charge and the enumeration cap. Construction checks that omega
/// is positive on every generator (ConeNotPointed otherwise).
class CountingSetup {
 public:
  static constexpr std::size_t kDefaultMaxCompositions = 1'000'000;

  CountingSetup(ClassLattice lattice, CentralCharge charge,
                std::size_t max_compositions = kDefaultMaxCompositions);

  const ClassLattice& lattice() const noexcept { return lattice_; }
  const CentralCharge& charge() const noexcept { return charge_; }
  std::size_t max_compositions() const noexcept { return max_compositions_; }

  /// beta lies in the monoid spanned by the generators (zero included).
  bool in_monoid(const CurveClass& beta) const;

  /// Nonzero monoid elements with beta or beta = 0 and k >= 1. These are the
  /// classes of phase in (0, 1].
  bool is_effective(const NumClass& v) const;

  /// All monoid elements of omega-degree at most the degree of beta.
  std::set<CurveClass> monoid_elements_up_to(const CurveClass& beta) const;

  /// Effective classes u of the same phase as v with v - u zero or effective
  /// of the same phase, in increasing order. Includes v itself.
  std::vector<NumClass> same_phase_pieces(const NumClass& v) const;

 private:
  ClassLattice lattice_;
  CentralCharge charge_;
  std::size_t max_compositions_;
};

}  // namespace gvmot::counting
