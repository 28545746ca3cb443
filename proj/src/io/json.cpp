// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/io/json.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "gvmot/error.hpp"

namespace gvmot::io {
namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) { fail(ErrorKind::Schema, where + ": " + what); }

void expect_object(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) schema(where, "expected an object");
  for (const char* key : required) {
    if (!j.contains(key)) schema(where, std::string("missing field '") + key + "'");
  }
  for (const auto& [key, value] : j.items()) {
    auto known = [&](const char* k) { return key == k; };
    if (std::none_of(required.begin(), required.end(), known) && std::none_of(optional.begin(), optional.end(), known)) {
      schema(where, "unknown field '" + key + "'");
    }
  }
}

const Json& expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

std::int64_t int64_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    schema(where, "integer out of range");
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  schema(where, "expected an integer");
}

int int_from_json(const Json& j, const std::string& where) {
  auto x = int64_from_json(j, where);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) schema(where, "integer out of range");
  return static_cast<int>(x);
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

std::vector<BigRational> rational_vector_from_json(const Json& j, const std::string& where) {
  std::vector<BigRational> out;
  for (std::size_t i = 0; i < expect_array(j, where).size(); ++i) {
    out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

counting::CurveClass curve_class_from_json(const Json& j, const std::string& where) {
  counting::CurveClass out;
  for (std::size_t i = 0; i < expect_array(j, where).size(); ++i) {
    out.push_back(int64_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json rational_vector_to_json(const std::vector<BigRational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

const Json& tuple(std::size_t n, const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != n) schema(where, "expected an array of length " + std::to_string(n));
  return j;
}

}  // namespace

Document parse_document(const Json& j) {
  static const std::set<std::string> kKinds{"bispin",      "graded_nilpotent", "betti_variety", "motive",
                                            "stack_class", "count_model",      "gv_table",      "gw_series"};
  expect_object(j, "document", {"v", "kind", "data"}, {"name", "note"});
  if (!j["v"].is_number_integer() || j["v"].get<std::int64_t>() != kSchemaVersion) {
    schema("document", "unsupported schema version, expected \"v\": 1");
  }
  Document d;
  d.kind = string_from_json(j["kind"], "document.kind");
  if (!kKinds.contains(d.kind)) schema("document.kind", "unknown kind '" + d.kind + "'");
  if (j.contains("name")) d.name = string_from_json(j["name"], "document.name");
  if (j.contains("note")) d.note = string_from_json(j["note"], "document.note");
  d.data = j["data"];
  return d;
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Schema, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json j = Json::parse(buffer.str(), nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::Schema, "'" + path + "' is not valid JSON");
  return parse_document(j);
}

Json make_document(const std::string& kind, Json data, const std::string& name) {
  Json j{{"v", kSchemaVersion}, {"kind", kind}};
  if (!name.empty()) j["name"] = name;
  j["data"] = std::move(data);
  return j;
}

BigInt bigint_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const Error& e) {
      schema(where, e.what());
    }
  }
  schema(where, "expected an integer or a decimal string");
}

BigRational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_number_unsigned()) return BigRational(bigint_from_json(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      schema(where, e.what());
    }
  }
  schema(where, "expected an integer or a \"p/q\" string");
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(Json::array({m.t, m.s, c.get_str()}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p;
  for (std::size_t i = 0; i < expect_array(j, "polynomial").size(); ++i) {
    const std::string where = "polynomial[" + std::to_string(i) + "]";
    const Json& term = tuple(3, j[i], where);
    auto a = int64_from_json(term[0], where);
    auto b = int64_from_json(term[1], where);
    if (b < 0) schema(where, "negative power of s");
    p.add_term(Monomial{a, b}, bigint_from_json(term[2], where));
  }
  return p;
}

Json to_json(const RationalFn& f) { return Json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}}; }

RationalFn rational_fn_from_json(const Json& j) {
  expect_object(j, "rational function", {"num"}, {"den"});
  LaurentPoly num = poly_from_json(j["num"]);
  LaurentPoly den = j.contains("den") ? poly_from_json(j["den"]) : LaurentPoly(1);
  if (den.is_zero()) schema("rational function", "zero denominator");
  return RationalFn::fraction(num, den);
}

Json to_json(const lefschetz::BispinContent& v) {
  Json out = Json::array();
  for (const auto& [k, m] : v.entries()) out.push_back(Json::array({k.two_jl, k.two_jr, m.get_str()}));
  return out;
}

lefschetz::BispinContent bispin_from_json(const Json& j) {
  lefschetz::BispinContent v;
  for (std::size_t i = 0; i < expect_array(j, "bispin").size(); ++i) {
    const std::string where = "bispin[" + std::to_string(i) + "]";
    const Json& e = tuple(3, j[i], where);
    int jl = int_from_json(e[0], where);
    int jr = int_from_json(e[1], where);
    if (jl < 0 || jr < 0) schema(where, "negative doubled spin");
    v.add(jl, jr, bigint_from_json(e[2], where));
  }
  return v;
}

Json to_json(const lefschetz::JordanCensus& c) {
  Json out = Json::array();
  for (const auto& [cell, n] : c.entries()) out.push_back(Json::array({cell.alpha, cell.length, n.get_str()}));
  return out;
}

lefschetz::JordanCensus census_from_json(const Json& j) {
  lefschetz::JordanCensus c;
  for (std::size_t i = 0; i < expect_array(j, "census").size(); ++i) {
    const std::string where = "census[" + std::to_string(i) + "]";
    const Json& e = tuple(3, j[i], where);
    int alpha = int_from_json(e[0], where);
    int length = int_from_json(e[1], where);
    if (length < 1) schema(where, "cell length must be positive");
    c.add(alpha, length, bigint_from_json(e[2], where));
  }
  return c;
}

lefschetz::GradedNilpotent graded_nilpotent_from_json(const Json& j) {
  expect_object(j, "graded_nilpotent", {"dims"}, {"maps"});
  auto degree_key = [](const std::string& key, const std::string& where) {
    try {
      std::size_t used = 0;
      int d = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
      return d;
    } catch (const std::exception&) {
      schema(where, "degree key '" + key + "' is not an integer");
    }
  };
  if (!j["dims"].is_object()) schema("graded_nilpotent.dims", "expected an object");
  std::map<int, std::size_t> dims;
  for (const auto& [key, value] : j["dims"].items()) {
    auto n = int64_from_json(value, "graded_nilpotent.dims." + key);
    if (n < 0) schema("graded_nilpotent.dims." + key, "negative dimension");
    dims[degree_key(key, "graded_nilpotent.dims")] = static_cast<std::size_t>(n);
  }
  std::map<int, Matrix> maps;
  if (j.contains("maps")) {
    if (!j["maps"].is_object()) schema("graded_nilpotent.maps", "expected an object");
    for (const auto& [key, value] : j["maps"].items()) {
      const std::string where = "graded_nilpotent.maps." + key;
      expect_array(value, where);
      const std::size_t rows = value.size();
      const std::size_t cols = rows == 0 ? 0 : expect_array(value[0], where).size();
      Matrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        if (!value[r].is_array() || value[r].size() != cols) schema(where, "ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(value[r][c], where);
      }
      int deg = degree_key(key, "graded_nilpotent.maps");
      if (rows == 0) m = Matrix(dims.contains(deg + 2) ? dims[deg + 2] : 0, dims.contains(deg) ? dims[deg] : 0);
      maps.emplace(deg, std::move(m));
    }
  }
  return lefschetz::GradedNilpotent(std::move(dims), std::move(maps));
}

namespace {

std::vector<BigInt> bettis_from_json(const Json& j, const std::string& where) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < expect_array(j, where).size(); ++i) out.push_back(bigint_from_json(j[i], where));
  return out;
}

}  // namespace

motives::MotiveExpr betti_variety_from_json(const Json& j) {
  expect_object(j, "betti_variety", {"bettis"}, {"base", "name"});
  auto bettis = bettis_from_json(j["bettis"], "betti_variety.bettis");
  std::string name = j.contains("name") ? string_from_json(j["name"], "betti_variety.name") : "X";
  std::string base = j.contains("base") ? string_from_json(j["base"], "betti_variety.base") : "self";
  if (base == "self") return motives::smooth_from_betti(bettis, name);
  if (base == "point") return motives::point_base_from_betti(bettis, name);
  schema("betti_variety.base", "expected \"self\" or \"point\"");
}

motives::AbsMotive abs_motive_from_json(const Json& j) {
  if (j.is_object() && j.contains("poly")) {
    expect_object(j, "absolute class", {"poly"}, {"name"});
    std::string name = j.contains("name") ? string_from_json(j["name"], "absolute class.name") : "";
    try {
      return motives::AbsMotive::from_poly(poly_from_json(j["poly"]), name);
    } catch (const Error& e) {
      schema("absolute class", e.what());
    }
  }
  expect_object(j, "absolute class", {"const"}, {"n"});
  std::string c = string_from_json(j["const"], "absolute class.const");
  auto n = [&] {
    if (!j.contains("n")) schema("absolute class", "'" + c + "' needs \"n\"");
    return int_from_json(j["n"], "absolute class.n");
  };
  if (c == "point" || c == "L" || c == "Gm") {
    if (j.contains("n")) schema("absolute class", "'" + c + "' takes no \"n\"");
    if (c == "point") return motives::AbsMotive::point();
    if (c == "L") return motives::AbsMotive::lefschetz();
    return motives::AbsMotive::gm();
  }
  if (c == "A") return motives::AbsMotive::affine(n());
  if (c == "GL") return motives::AbsMotive::gl(n());
  schema("absolute class.const", "unknown constant '" + c + "'");
}

motives::MotiveExpr motive_from_json(const Json& j) {
  using motives::MotiveExpr;
  if (!j.is_object() || !j.contains("kind")) schema("motive", "expected an object with a \"kind\"");
  const std::string kind = string_from_json(j["kind"], "motive.kind");
  const std::string where = "motive(" + kind + ")";
  if (kind == "zero") {
    expect_object(j, where, {"kind"});
    return MotiveExpr::zero();
  }
  if (kind == "atom") {
    expect_object(j, where, {"kind", "dim"}, {"name", "census", "bispin"});
    if (j.contains("census") == j.contains("bispin")) schema(where, "give exactly one of \"census\" and \"bispin\"");
    std::string name = j.contains("name") ? string_from_json(j["name"], where + ".name") : "atom";
    auto census = j.contains("census") ? census_from_json(j["census"])
                                       : lefschetz::census_from_bispin(bispin_from_json(j["bispin"]));
    return MotiveExpr::atom(name, int_from_json(j["dim"], where + ".dim"), std::move(census));
  }
  if (kind == "betti" || kind == "point_betti") {
    expect_object(j, where, {"kind", "bettis"}, {"name"});
    auto bettis = bettis_from_json(j["bettis"], where + ".bettis");
    std::string name = j.contains("name") ? string_from_json(j["name"], where + ".name") : "X";
    return kind == "betti" ? motives::smooth_from_betti(bettis, name) : motives::point_base_from_betti(bettis, name);
  }
  if (kind == "sum") {
    expect_object(j, where, {"kind", "terms"});
    std::vector<MotiveExpr> terms;
    for (const auto& t : expect_array(j["terms"], where + ".terms")) terms.push_back(motive_from_json(t));
    return MotiveExpr::sum(std::move(terms));
  }
  if (kind == "diff") {
    expect_object(j, where, {"kind", "left", "right"});
    return MotiveExpr::diff(motive_from_json(j["left"]), motive_from_json(j["right"]));
  }
  if (kind == "scale") {
    expect_object(j, where, {"kind", "n", "expr"});
    return MotiveExpr::scale(bigint_from_json(j["n"], where + ".n"), motive_from_json(j["expr"]));
  }
  if (kind == "product") {
    expect_object(j, where, {"kind", "factor", "expr"});
    return MotiveExpr::product(abs_motive_from_json(j["factor"]), motive_from_json(j["expr"]));
  }
  if (kind == "proj_bundle") {
    expect_object(j, where, {"kind", "base", "r"});
    return MotiveExpr::proj_bundle(motive_from_json(j["base"]), int_from_json(j["r"], where + ".r"));
  }
  if (kind == "blowup") {
    expect_object(j, where, {"kind", "ambient", "center", "r"});
    return MotiveExpr::blowup(motive_from_json(j["ambient"]), motive_from_json(j["center"]),
                              int_from_json(j["r"], where + ".r"));
  }
  if (kind == "fibration") {
    expect_object(j, where, {"kind", "base", "fibre"});
    return MotiveExpr::fibration(motive_from_json(j["base"]), abs_motive_from_json(j["fibre"]));
  }
  if (kind == "finite_push") {
    expect_object(j, where, {"kind", "expr"});
    return MotiveExpr::finite_push(motive_from_json(j["expr"]));
  }
  schema("motive.kind", "unknown node kind '" + kind + "'");
}

stacks::StackClass stack_class_from_json(const Json& j) {
  stacks::StackClass out;
  for (std::size_t i = 0; i < expect_array(j, "stack_class").size(); ++i) {
    const std::string where = "stack_class[" + std::to_string(i) + "]";
    const Json& term = j[i];
    expect_object(term, where, {"expr"}, {"coeff", "quotient_by"});
    auto expr = motive_from_json(term["expr"]);
    stacks::StackClass piece = term.contains("quotient_by")
                                   ? stacks::quotient_by_special_group(expr, abs_motive_from_json(term["quotient_by"]))
                                   : stacks::StackClass::of(expr);
    if (term.contains("coeff")) piece = piece.scaled(rational_fn_from_json(term["coeff"]));
    out += piece;
  }
  return out;
}

CountModel count_model_from_json(const Json& j, std::optional<std::size_t> max_compositions) {
  expect_object(j, "count_model", {"lattice", "charge", "atoms"}, {"ext_defect", "combinator", "max_compositions"});
  const Json& lat = j["lattice"];
  expect_object(lat, "count_model.lattice", {"rank", "generators"});
  const int rank = int_from_json(lat["rank"], "count_model.lattice.rank");
  if (rank < 0) schema("count_model.lattice.rank", "negative rank");
  std::vector<counting::CurveClass> generators;
  for (const auto& g : expect_array(lat["generators"], "count_model.lattice.generators")) {
    generators.push_back(curve_class_from_json(g, "count_model.lattice.generators"));
  }
  const Json& ch = j["charge"];
  expect_object(ch, "count_model.charge", {"B", "omega"});
  counting::CentralCharge charge{rational_vector_from_json(ch["B"], "count_model.charge.B"),
                                 rational_vector_from_json(ch["omega"], "count_model.charge.omega")};
  const auto r = static_cast<std::size_t>(rank);
  if (charge.b_field.size() != r || charge.omega.size() != r) schema("count_model.charge", "length differs from rank");

  std::size_t cap = counting::CountingSetup::kDefaultMaxCompositions;
  if (j.contains("max_compositions")) {
    auto c = int64_from_json(j["max_compositions"], "count_model.max_compositions");
    if (c < 1) schema("count_model.max_compositions", "must be positive");
    cap = static_cast<std::size_t>(c);
  }
  if (max_compositions) cap = *max_compositions;

  counting::ClassLattice lattice;
  try {
    lattice = counting::ClassLattice(r, std::move(generators));
  } catch (const Error& e) {
    schema("count_model.lattice", e.what());
  }

  std::map<counting::NumClass, stacks::StackClass> atoms;
  if (!j["atoms"].is_object()) schema("count_model.atoms", "expected an object keyed by class");
  for (const auto& [key, value] : j["atoms"].items()) atoms.emplace(counting::parse_class_key(key, r), stack_class_from_json(value));

  std::vector<counting::ExtDefectEntry> ext;
  if (j.contains("ext_defect")) {
    for (std::size_t i = 0; i < expect_array(j["ext_defect"], "count_model.ext_defect").size(); ++i) {
      const std::string where = "count_model.ext_defect[" + std::to_string(i) + "]";
      const Json& e = tuple(3, j["ext_defect"][i], where);
      ext.push_back({counting::parse_class_key(string_from_json(e[0], where), r),
                     counting::parse_class_key(string_from_json(e[1], where), r), bigint_from_json(e[2], where)});
    }
  }
  auto combinator = counting::Combinator::ClebschGordan;
  if (j.contains("combinator")) {
    std::string c = string_from_json(j["combinator"], "count_model.combinator");
    if (c == "product") {
      combinator = counting::Combinator::Product;
    } else if (c != "clebsch_gordan") {
      schema("count_model.combinator", "expected \"clebsch_gordan\" or \"product\"");
    }
  }
  return CountModel{counting::CountingSetup(std::move(lattice), std::move(charge), cap),
                    counting::EvalModel(std::move(atoms), ext, combinator)};
}

gw::GVTable gv_table_from_json(const Json& j) {
  expect_object(j, "gv_table", {"omega", "entries"}, {"cuts"});
  gw::GVTable t;
  t.omega = rational_vector_from_json(j["omega"], "gv_table.omega");
  int max_genus = 0;
  BigRational max_degree = 0;
  for (std::size_t i = 0; i < expect_array(j["entries"], "gv_table.entries").size(); ++i) {
    const std::string where = "gv_table.entries[" + std::to_string(i) + "]";
    const Json& e = tuple(3, j["entries"][i], where);
    int g = int_from_json(e[0], where);
    if (g < 0) schema(where, "negative genus");
    auto beta = curve_class_from_json(e[1], where);
    if (beta.size() != t.omega.size()) schema(where, "class rank differs from omega");
    t.add(g, beta, bigint_from_json(e[2], where));
    max_genus = std::max(max_genus, g);
    BigRational d = 0;
    for (std::size_t k = 0; k < beta.size(); ++k) d += t.omega[k] * BigRational(static_cast<long>(beta[k]));
    max_degree = std::max(max_degree, d);
  }
  t.genus_max = max_genus;
  t.degree_cut = max_degree;
  if (j.contains("cuts")) {
    expect_object(j["cuts"], "gv_table.cuts", {}, {"genus", "degree"});
    if (j["cuts"].contains("genus")) t.genus_max = int_from_json(j["cuts"]["genus"], "gv_table.cuts.genus");
    if (j["cuts"].contains("degree")) t.degree_cut = rational_from_json(j["cuts"]["degree"], "gv_table.cuts.degree");
  }
  return t;
}

Json to_json(const gw::GVTable& t) {
  Json entries = Json::array();
  for (const auto& [key, n] : t.entries) entries.push_back(Json::array({key.genus, key.beta, n.get_str()}));
  return Json{{"omega", rational_vector_to_json(t.omega)},
              {"cuts", {{"genus", t.genus_max}, {"degree", t.degree_cut.get_str()}}},
              {"entries", entries}};
}

gw::GWSeries gw_series_from_json(const Json& j) {
  expect_object(j, "gw_series", {"omega", "cuts", "coeffs"});
  gw::GWSeries s;
  s.omega = rational_vector_from_json(j["omega"], "gw_series.omega");
  expect_object(j["cuts"], "gw_series.cuts", {"degree", "lambda"});
  s.degree_cut = rational_from_json(j["cuts"]["degree"], "gw_series.cuts.degree");
  s.lambda_cut = int_from_json(j["cuts"]["lambda"], "gw_series.cuts.lambda");
  for (std::size_t i = 0; i < expect_array(j["coeffs"], "gw_series.coeffs").size(); ++i) {
    const std::string where = "gw_series.coeffs[" + std::to_string(i) + "]";
    const Json& e = tuple(3, j["coeffs"][i], where);
    auto beta = curve_class_from_json(e[0], where);
    if (beta.size() != s.omega.size()) schema(where, "class rank differs from omega");
    int lambda_exp = int_from_json(e[1], where);
    if (lambda_exp < -2 || lambda_exp % 2 != 0) schema(where, "lambda exponent must be even and >= -2");
    if (lambda_exp > s.lambda_cut) schema(where, "lambda exponent beyond the cut");
    s.add(beta, lambda_exp, rational_from_json(e[2], where));
  }
  return s;
}

Json to_json(const gw::GWSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [key, c] : s.coeffs) coeffs.push_back(Json::array({key.beta, key.lambda_exp, c.get_str()}));
  return Json{{"omega", rational_vector_to_json(s.omega)},
              {"cuts", {{"degree", s.degree_cut.get_str()}, {"lambda", s.lambda_cut}}},
              {"coeffs", coeffs}};
}

}  // namespace gvmot::io
