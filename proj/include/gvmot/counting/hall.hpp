// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gvmot/counting/lattice.hpp"

namespace gvmot::counting {

using Word = std::vector<NumClass>;

/// Which generators the letters of a word stand for.
enum class Alphabet { Delta, Epsilon };

/// Rational combination of words in the free associative algebra on
/// letters indexed by classes. The product is concatenation.
class FreeHallElement {
 public:
  explicit FreeHallElement(Alphabet alphabet = Alphabet::Delta) : alphabet_(alphabet) {}
  static FreeHallElement letter(Alphabet alphabet, const NumClass& v);

  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::map<Word, BigRational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigRational coeff(const Word& w) const;

  void add(const Word& w, const BigRational& c);

  FreeHallElement& operator+=(const FreeHallElement& o);
  FreeHallElement& operator-=(const FreeHallElement& o);
  FreeHallElement& operator*=(const BigRational& c);
  friend FreeHallElement operator+(FreeHallElement a, const FreeHallElement& b) { return a += b; }
  friend FreeHallElement operator-(FreeHallElement a, const FreeHallElement& b) { return a -= b; }
  friend FreeHallElement operator*(FreeHallElement a, const BigRational& c) { return a *= c; }
  /// Concatenation product.
  friend FreeHallElement operator*(const FreeHallElement& a, const FreeHallElement& b);
  friend bool operator==(const FreeHallElement&, const FreeHallElement&) = default;

 private:
  void check_same_alphabet(const FreeHallElement& o) const;

  Alphabet alphabet_;
  std::map<Word, BigRational> terms_;
};

/// Sum of the letters of a word.
NumClass word_class(const Word& w);

/// "d(1;1)*d(1;0) - 1/2 ..." using d and e for the two alphabets.
std::string to_string(const FreeHallElement& f);

/// Ordered decompositions v = v_1 + ... + v_n into effective classes all of
/// the phase of v, including the one-letter word. Throws NotEffective, and
/// ResourceLimit beyond the setup's cap.
std::vector<Word> same_phase_compositions(const CountingSetup& setup, const NumClass& v);

/// eps(v) = sum over compositions of (-1)^{n-1}/n d(v_1)*...*d(v_n).
FreeHallElement epsilon_formal(const CountingSetup& setup, const NumClass& v);

/// d(v) = sum over compositions of 1/n! e(v_1)*...*e(v_n).
FreeHallElement delta_from_epsilon(const CountingSetup& setup, const NumClass& v);

/// Replaces every letter by the element the table assigns to its class and
/// expands. All table values must share one alphabet.
FreeHallElement substitute(const FreeHallElement& f, const std::function<FreeHallElement(const NumClass&)>& table);

}  // namespace gvmot::counting
