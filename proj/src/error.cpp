// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/error.hpp"

namespace gvmot {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::OddMDegree: return "OddMDegree";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotRepresentation: return "NotRepresentation";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::VirtualInput: return "VirtualInput";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::NotDualitySymmetric: return "NotDualitySymmetric";
    case ErrorKind::NotHardLefschetz: return "NotHardLefschetz";
    case ErrorKind::ZeroGroupClass: return "ZeroGroupClass";
    case ErrorKind::ZeroCharge: return "ZeroCharge";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::ConeNotPointed: return "ConeNotPointed";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::MissingAtom: return "MissingAtom";
    case ErrorKind::AsymmetricExtDefect: return "AsymmetricExtDefect";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

}  // namespace gvmot
