// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>

#include "gvmot/error.hpp"
#include "gvmot/io/json.hpp"
#include "support.hpp"

using namespace gvmot;
using namespace gvmot::io;
using namespace gvmot::testing;

namespace {

ErrorKind parse_error(const std::string& text) {
  try {
    parse_document(Json::parse(text));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

std::string data_file(const std::string& name) { return std::string(GVMOT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("envelopes are strict") {
  CHECK(parse_document(Json::parse(R"({"v": 1, "kind": "bispin", "data": []})")).kind == "bispin");
  CHECK(parse_error(R"({"kind": "bispin", "data": []})") == ErrorKind::Schema);
  CHECK(parse_error(R"({"v": 2, "kind": "bispin", "data": []})") == ErrorKind::Schema);
  CHECK(parse_error(R"({"v": 1, "kind": "spinor", "data": []})") == ErrorKind::Schema);
  CHECK(parse_error(R"({"v": 1, "kind": "bispin", "data": [], "extra": 0})") == ErrorKind::Schema);
  auto doc = make_document("gv_table", Json::object(), "x");
  CHECK(doc["v"] == 1);
  CHECK(parse_document(doc).name == "x");
}

TEST_CASE("numbers") {
  CHECK(bigint_from_json(Json("123456789012345678901234567890"), "n").get_str() == "123456789012345678901234567890");
  CHECK(bigint_from_json(Json(-7), "n") == -7);
  CHECK(rational_from_json(Json("3/6"), "q") == BigRational(1, 2));
  CHECK_THROWS_AS(bigint_from_json(Json(1.5), "n"), Error);
  CHECK_THROWS_AS(rational_from_json(Json("0.5"), "q"), Error);
}

TEST_CASE("polynomials round trip") {
  LaurentPoly p = poly({{-2, 2, 3}, {1, 0, -1}});
  CHECK(poly_from_json(to_json(p)) == p);
  CHECK(to_json(p).dump() == R"([[-2,2,"3"],[1,0,"-1"]])");
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([[0,-1,"1"]])")), Error);
  RationalFn f = RationalFn(C(1)) / RationalFn(T(2) - C(1));
  CHECK(rational_fn_from_json(to_json(f)) == f);
  CHECK(rational_fn_from_json(Json::parse(R"({"num": [[0,0,"2"]]})")) == RationalFn(2));
}

TEST_CASE("lefschetz documents") {
  auto v = bispin_from_json(Json::parse(R"([[2, 0, 1], [0, 1, "-3"]])"));
  CHECK(v.multiplicity(2, 0) == 1);
  CHECK(v.multiplicity(0, 1) == -3);
  CHECK_THROWS_AS(bispin_from_json(Json::parse(R"([[-2, 0, 1]])")), Error);
  auto c = census_from_json(Json::parse(R"([[-2, 3, 1]])"));
  CHECK(c.count(-2, 3) == 1);
  auto x = graded_nilpotent_from_json(
      Json::parse(R"({"dims": {"-2": 1, "0": 1, "2": 1}, "maps": {"-2": [["1"]], "0": [["1/2"]]}})"));
  CHECK(lefschetz::jordan_census(x) == lefschetz::JordanCensus{{{-2, 3}, BigInt(1)}});
  CHECK_THROWS_AS(graded_nilpotent_from_json(Json::parse(R"({"dims": {"0": 1}, "maps": {"0": [["1"]]}})")), Error);
}

TEST_CASE("motive documents") {
  auto e = motive_from_json(Json::parse(R"({"kind": "blowup", "r": 2,
      "ambient": {"kind": "betti", "bettis": [1, 0, 1, 0, 1]},
      "center": {"kind": "betti", "bettis": [1]}})"));
  CHECK(upsilon_rel(e) == S(2) + T(2));
  auto sum = motive_from_json(Json::parse(R"({"kind": "sum", "terms": [
      {"kind": "atom", "dim": 1, "bispin": [[0, 1, 1]]},
      {"kind": "product", "factor": {"const": "A", "n": 1}, "expr": {"kind": "zero"}}]})"));
  CHECK(upsilon_rel(sum) == S(1));
  CHECK_THROWS_AS(motive_from_json(Json::parse(R"({"kind": "betti", "bettis": [1], "colour": 1})")), Error);
  CHECK_THROWS_AS(motive_from_json(Json::parse(R"({"kind": "torus"})")), Error);
  CHECK(abs_motive_from_json(Json::parse(R"({"const": "GL", "n": 2})")).value == motives::AbsMotive::gl(2).value);
  CHECK_THROWS_AS(abs_motive_from_json(Json::parse(R"({"const": "GL"})")), Error);
}

TEST_CASE("stack class documents") {
  auto c = stack_class_from_json(Json::parse(R"([
      {"expr": {"kind": "betti", "bettis": [1]}, "quotient_by": {"const": "Gm"}},
      {"expr": {"kind": "betti", "bettis": [1]}, "coeff": {"num": [[0, 0, "2"]]}}])"));
  CHECK(stacks::upsilon_stack(c) == RationalFn(C(1)) / RationalFn(T(2) - C(1)) + RationalFn(2));
}

TEST_CASE("count model documents") {
  auto m = count_model_from_json(read_document(data_file("conifold.model.json")).data);
  CHECK(m.setup.lattice().rank() == 1);
  CHECK(m.model.has_atom(counting::NumClass{{1}, 1}));
  CHECK(m.model.combinator() == counting::Combinator::ClebschGordan);
  auto asym = Json::parse(R"({"lattice": {"rank": 1, "generators": [[1]]}, "charge": {"B": [0], "omega": [1]},
      "atoms": {}, "ext_defect": [["1;0", "2;0", 1]]})");
  try {
    count_model_from_json(asym);
    FAIL("asymmetric table accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AsymmetricExtDefect);
  }
  auto capped = count_model_from_json(Json::parse(R"({"lattice": {"rank": 1, "generators": [[1]]},
      "charge": {"B": ["1/2"], "omega": [1]}, "atoms": {}, "max_compositions": 5})"), 7);
  CHECK(capped.setup.max_compositions() == 7);
}

TEST_CASE("GV tables and GW series") {
  auto t = gv_table_from_json(read_document(data_file("conifold.gv.json")).data);
  CHECK(t.at(0, {1}) == 1);
  CHECK(t.degree_cut == 10);
  CHECK(gv_table_from_json(to_json(t)).entries == t.entries);
  auto s = gw::gv_to_gw(t, BigRational(3), 2);
  auto back = gw_series_from_json(to_json(s));
  CHECK(back.coeffs == s.coeffs);
  CHECK(back.lambda_cut == 2);
  CHECK_THROWS_AS(gw_series_from_json(Json::parse(R"({"omega": [1], "cuts": {"degree": 1, "lambda": 0},
      "coeffs": [[[1], 1, "1"]]})")),
                  Error);
}

TEST_CASE("bundled data files parse") {
  for (const char* name : {"point.bispin.json", "left_spin_one.bispin.json", "p2.betti.json",
                           "p1_bundle_over_p1.motive.json", "p2_blowup_point.motive.json", "conifold.model.json",
                           "cy3_point_class.model.json", "conifold.gv.json"}) {
    CAPTURE(name);
    CHECK_NOTHROW(read_document(data_file(name)));
  }
  CHECK_THROWS_AS(read_document(data_file("missing.json")), Error);
}
