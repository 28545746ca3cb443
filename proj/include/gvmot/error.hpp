// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gvmot {

enum class ErrorKind {
  ZeroPolynomial,
  OddMDegree,
  DivisionByZero,
  NotRepresentation,
  NotNilpotent,
  ShapeMismatch,
  VirtualInput,
  DimMismatch,
  NotDualitySymmetric,
  NotHardLefschetz,
  ZeroGroupClass,
  ZeroCharge,
  NotEffective,
  ConeNotPointed,
  ResourceLimit,
  MissingAtom,
  AsymmetricExtDefect,
  NotPolynomial,
  InsufficientTruncation,
  NonIntegral,
  InvalidArgument,
  Schema,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so that front ends can
/// map it onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gvmot
