// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

// JSON documents. Every document is an envelope
//   {"v": 1, "kind": <kind>, "name"?: str, "note"?: str, "data": <payload>}
// and parsing is strict: unknown fields are rejected with ErrorKind::Schema.
// Numbers that may exceed 64 bits are accepted as JSON integers or as
// decimal strings; rationals as integers or "p/q" strings.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gvmot/algebra/rational_fn.hpp"
#include "gvmot/counting/eval_model.hpp"
#include "gvmot/gwseries/transform.hpp"
#include "gvmot/lefschetz/census.hpp"
#include "gvmot/motives/motive.hpp"
#include "gvmot/stacks/stack_class.hpp"

namespace gvmot::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct Document {
  std::string kind;
  std::string name;
  std::string note;
  Json data;
};

/// Validates the envelope. Known kinds: bispin, graded_nilpotent,
/// betti_variety, motive, stack_class, count_model, gv_table, gw_series.
Document parse_document(const Json& j);
/// Reads and parses a file; unreadable files and bad JSON raise Schema.
Document read_document(const std::string& path);
Json make_document(const std::string& kind, Json data, const std::string& name = {});

BigInt bigint_from_json(const Json& j, const std::string& where);
BigRational rational_from_json(const Json& j, const std::string& where);

/// [[a, b, "c"], ...] for c t^a s^b.
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);
/// {"num": poly, "den": poly}.
Json to_json(const RationalFn& f);
RationalFn rational_fn_from_json(const Json& j);

/// [[twoJL, twoJR, mult], ...].
Json to_json(const lefschetz::BispinContent& v);
lefschetz::BispinContent bispin_from_json(const Json& j);
/// [[alpha, l, count], ...].
Json to_json(const lefschetz::JordanCensus& c);
lefschetz::JordanCensus census_from_json(const Json& j);
/// {"dims": {"deg": n}, "maps": {"deg": [[q, ...], ...]}}.
lefschetz::GradedNilpotent graded_nilpotent_from_json(const Json& j);

/// {"bettis": [...], "base": "self" | "point"}.
motives::MotiveExpr betti_variety_from_json(const Json& j);
/// {"const": "point"|"L"|"Gm"|"A"|"GL", "n"?} or {"poly": [...], "name"?}.
motives::AbsMotive abs_motive_from_json(const Json& j);
/// A tree of nodes each carrying a "kind" field.
motives::MotiveExpr motive_from_json(const Json& j);

/// [{"coeff"?: {"num", "den"}, "quotient_by"?: abs-motive, "expr": motive}, ...].
stacks::StackClass stack_class_from_json(const Json& j);

struct CountModel {
  counting::CountingSetup setup;
  counting::EvalModel model;
};
/// {"lattice": {"rank", "generators"}, "charge": {"B", "omega"},
///  "atoms": {class-key: stack-class}, "ext_defect": [[key, key, e], ...],
///  "combinator"?: "clebsch_gordan" | "product", "max_compositions"?: n}.
/// max_compositions overrides the document value when given.
CountModel count_model_from_json(const Json& j, std::optional<std::size_t> max_compositions = std::nullopt);

/// {"omega": [...], "cuts": {"genus", "degree"}, "entries": [[g, beta, n], ...]}.
gw::GVTable gv_table_from_json(const Json& j);
Json to_json(const gw::GVTable& t);
/// {"omega": [...], "cuts": {"degree", "lambda"}, "coeffs": [[beta, e, q], ...]}.
gw::GWSeries gw_series_from_json(const Json& j);
Json to_json(const gw::GWSeries& s);

}  // namespace gvmot::io
