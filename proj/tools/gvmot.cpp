// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

// gvmot: command-line front end for the library.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gvmot/counting/eval_model.hpp"
#include "gvmot/error.hpp"
#include "gvmot/io/json.hpp"
#include "gvmot/lefschetz/bispin.hpp"
#include "gvmot/lefschetz/census.hpp"
#include "gvmot/verify/suites.hpp"

namespace {

using namespace gvmot;
using io::Json;

constexpr const char* kModelAssumption =
    "split-stratum model: the Hall product is free concatenation of classes; values come only from the "
    "supplied atoms, their Ext-defect table and the census combinator";

enum Exit : int { kOk = 0, kPropertyFailure = 1, kUsage = 2, kCrossCheck = 3, kMissingData = 4, kNotPolynomial = 5 };

struct CrossCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  int genus_max = 3;
  std::optional<std::string> degree_max;
  std::optional<int> lambda_order;
  bool json = false;
  std::uint64_t seed = 42;
  std::optional<std::size_t> max_compositions;
  std::vector<std::string> classes;
  std::string direction;
  std::size_t cases = 0;
  unsigned threads = 1;
  std::string suite;
};

/// Aligned plain-text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void emit(const Options& o, const Json& j, const Table& t, const std::vector<std::string>& preamble = {}) {
  if (o.json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (const auto& line : preamble) std::cout << line << '\n';
  t.print(std::cout);
}

io::Document load(const Options& o, std::initializer_list<const char*> kinds) {
  if (o.input.empty()) fail(ErrorKind::InvalidArgument, "--input is required");
  io::Document doc = io::read_document(o.input);
  if (std::find_if(kinds.begin(), kinds.end(), [&](const char* k) { return doc.kind == k; }) == kinds.end()) {
    std::string expected;
    for (const char* k : kinds) expected += (expected.empty() ? "" : " or ") + std::string(k);
    fail(ErrorKind::Schema, "document kind '" + doc.kind + "' is not accepted here; expected " + expected);
  }
  return doc;
}

std::string beta_text(const counting::CurveClass& beta) { return "(" + counting::to_key(beta) + ")"; }

Json beta_json(const counting::CurveClass& beta) {
  Json out = Json::array();
  for (auto b : beta) out.push_back(b);
  return out;
}

int cmd_hst(const Options& o) {
  auto doc = load(o, {"bispin"});
  auto v = io::bispin_from_json(doc.data);
  std::optional<lefschetz::JordanCensus> census;
  if (v.is_nonnegative()) census = lefschetz::census_from_bispin(v);
  Table table({"g", "hst", "cells"});
  Json rows = Json::array();
  for (int g = 0; g <= o.genus_max; ++g) {
    auto a = lefschetz::hst_ng(v, g);
    std::optional<BigInt> b;
    if (census) b = lefschetz::alt_ng(*census, g);
    if (b && *b != a) {
      throw CrossCheckFailure("g=" + std::to_string(g) + ": hst gives " + a.get_str() + ", cells give " + b->get_str());
    }
    table.row({std::to_string(g), a.get_str(), b ? b->get_str() : "-"});
    rows.push_back({{"g", g}, {"n", a.get_str()}, {"cells", b ? Json(b->get_str()) : Json(nullptr)}});
  }
  emit(o, {{"command", "hst"}, {"rows", rows}}, table);
  return kOk;
}

int cmd_census(const Options& o) {
  auto doc = load(o, {"bispin", "graded_nilpotent"});
  lefschetz::JordanCensus census;
  if (doc.kind == "bispin") {
    auto v = io::bispin_from_json(doc.data);
    census = lefschetz::census_from_bispin(v);
    if (lefschetz::jordan_census(lefschetz::realize_right_action(v)) != census) {
      throw CrossCheckFailure("rank census of the realized operator differs from the bispin cells");
    }
  } else {
    census = lefschetz::jordan_census(io::graded_nilpotent_from_json(doc.data));
  }
  Table table({"alpha", "length", "count"});
  for (const auto& [cell, n] : census.entries()) table.row({std::to_string(cell.alpha), std::to_string(cell.length), n.get_str()});
  emit(o, {{"command", "census"}, {"cells", io::to_json(census)}, {"dimension", census.total_dimension().get_str()}},
       table);
  return kOk;
}

int cmd_upsilon(const Options& o) {
  auto doc = load(o, {"motive", "betti_variety"});
  auto e = doc.kind == "motive" ? io::motive_from_json(doc.data) : io::betti_variety_from_json(doc.data);
  auto value = motives::upsilon_rel(e);
  Json j{{"command", "upsilon"}, {"value", io::to_json(value)}, {"text", to_string(value)}};
  if (e.dim()) j["dim"] = *e.dim();
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_string(value) << '\n';
  }
  return kOk;
}

int cmd_stack(const Options& o) {
  auto doc = load(o, {"stack_class"});
  auto value = stacks::upsilon_stack(io::stack_class_from_json(doc.data));
  if (o.json) {
    std::cout << Json{{"command", "stack"}, {"value", io::to_json(value)}, {"text", to_string(value)}}.dump(2) << '\n';
  } else {
    std::cout << to_string(value) << '\n';
  }
  return kOk;
}

int cmd_gv(const Options& o) {
  auto doc = load(o, {"count_model"});
  auto model = io::count_model_from_json(doc.data, o.max_compositions);
  if (o.classes.empty()) fail(ErrorKind::InvalidArgument, "at least one --class is required");
  Table table({"class", "P", "g", "n"});
  Json results = Json::array();
  for (const auto& key : o.classes) {
    auto v = counting::parse_class_key(key, model.setup.lattice().rank());
    auto p = counting::p_of_v(model.setup, v, model.model);
    Json ns = Json::array();
    for (int g = 0; g <= o.genus_max; ++g) {
      auto n = counting::ng_from_p(p, g);
      ns.push_back(n.get_str());
      table.row({g == 0 ? counting::to_key(v) : "", g == 0 ? to_string(p) : "", std::to_string(g), n.get_str()});
    }
    results.push_back({{"class", counting::to_key(v)}, {"P", io::to_json(p)}, {"P_text", to_string(p)}, {"n", ns}});
  }
  emit(o, {{"command", "gv"}, {"assumption", kModelAssumption}, {"results", results}}, table,
       {std::string("# ") + kModelAssumption});
  return kOk;
}

int cmd_gw(const Options& o) {
  auto doc = load(o, {"gv_table", "gw_series"});
  std::string direction = o.direction.empty() ? (doc.kind == "gv_table" ? "to-gw" : "to-gv") : o.direction;
  if ((direction == "to-gw") != (doc.kind == "gv_table")) {
    fail(ErrorKind::InvalidArgument, "--direction " + direction + " does not apply to a " + doc.kind + " document");
  }
  if (direction == "to-gw") {
    auto table = io::gv_table_from_json(doc.data);
    BigRational degree_cut = o.degree_max ? parse_rational(*o.degree_max) : table.degree_cut;
    int lambda_cut = o.lambda_order.value_or(std::max(0, 2 * table.genus_max - 2));
    if (sgn(degree_cut) < 0 || lambda_cut < 0) fail(ErrorKind::InvalidArgument, "cutoffs must be nonnegative");
    auto series = gw::gv_to_gw(table, degree_cut, lambda_cut);
    Table out({"beta", "lambda", "N"});
    for (const auto& [key, c] : series.coeffs) out.row({beta_text(key.beta), std::to_string(key.lambda_exp), c.get_str()});
    emit(o, {{"command", "gw"}, {"direction", direction}, {"series", io::to_json(series)}}, out);
    return kOk;
  }
  auto series = io::gw_series_from_json(doc.data);
  int genus_max = o.lambda_order ? *o.lambda_order / 2 + 1 : series.lambda_cut / 2 + 1;
  auto solved = gw::gw_to_gv(series, genus_max);
  Table out({"g", "beta", "n"});
  for (const auto& [key, n] : solved.table.entries) out.row({std::to_string(key.genus), beta_text(key.beta), n.get_str()});
  Json warnings = Json::array();
  std::vector<std::string> notes;
  for (const auto& bad : solved.non_integral) {
    warnings.push_back({{"g", bad.genus}, {"beta", beta_json(bad.beta)}, {"value", bad.value.get_str()}});
    notes.push_back("# warning: non-integral value " + bad.value.get_str() + " at g=" + std::to_string(bad.genus) +
                    ", beta=" + beta_text(bad.beta));
  }
  Json j{{"command", "gw"}, {"direction", direction}, {"table", io::to_json(solved.table)}};
  if (!warnings.empty()) j["warnings"] = warnings;
  emit(o, j, out, notes);
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto names = verify::suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
    fail(ErrorKind::InvalidArgument, "unknown suite '" + o.suite + "'");
  }
  verify::RunOptions run{o.seed, o.cases, std::max(1U, o.threads)};
  auto reports = verify::run_suite(o.suite, run);
  bool ok = true;
  Table table({"suite", "property", "cases", "failures"});
  Json rows = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    table.row({r.suite, r.name, std::to_string(r.cases), std::to_string(r.failures)});
    Json row{{"suite", r.suite}, {"property", r.name}, {"cases", r.cases}, {"failures", r.failures}};
    if (!r.passed()) row["counterexample"] = r.counterexample;
    rows.push_back(row);
  }
  if (o.json) {
    std::cout << Json{{"command", "verify"}, {"seed", std::to_string(o.seed)}, {"passed", ok}, {"properties", rows}}.dump(2)
              << '\n';
  } else {
    table.print(std::cout);
    for (const auto& r : reports) {
      if (!r.passed()) std::cout << "counterexample for '" << r.name << "': " << r.counterexample << '\n';
    }
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kOk : kPropertyFailure;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingAtom:
      return kMissingData;
    case ErrorKind::NotPolynomial:
    case ErrorKind::OddMDegree:
      return kNotPolynomial;
    default:
      return kUsage;
  }
}

int report_error(const std::string& kind, const std::string& message, int code) {
  std::cerr << Json{{"error", kind}, {"message", message}, {"exit", code}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gvmot: motivic Gopakumar-Vafa invariants, stack motives and GV/GW transforms"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Machine-readable output");
    return sub;
  };
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "Input JSON document")->required(); };

  auto* hst = add_common(app.add_subcommand("hst", "n_g of a bispin document by both routes"));
  add_input(hst);
  hst->add_option("--genus-max", o.genus_max, "Largest genus")->check(CLI::NonNegativeNumber);

  auto* census = add_common(app.add_subcommand("census", "Jordan cell census of a bispin or graded_nilpotent document"));
  add_input(census);

  auto* upsilon = add_common(app.add_subcommand("upsilon", "Relative motivic value of a motive or betti_variety document"));
  add_input(upsilon);

  auto* stack = add_common(app.add_subcommand("stack", "Value of a stack_class document"));
  add_input(stack);

  auto* gv = add_common(app.add_subcommand("gv", "P(v) and n_g for classes of a count_model document"));
  add_input(gv);
  gv->add_option("--class", o.classes, "Class key 'b1,...,br;k' (repeatable)")->required();
  gv->add_option("--genus-max", o.genus_max, "Largest genus")->check(CLI::NonNegativeNumber);
  gv->add_option("--max-compositions", o.max_compositions, "Cap on enumerated same-phase compositions");

  auto* gw = add_common(app.add_subcommand("gw", "Convert between GV tables and GW series"));
  add_input(gw);
  gw->add_option("--direction", o.direction, "to-gw or to-gv (default: from the document kind)")
      ->check(CLI::IsMember({"to-gw", "to-gv"}));
  gw->add_option("--degree-max", o.degree_max, "Largest omega-degree kept (integer or p/q)");
  gw->add_option("--lambda-order", o.lambda_order, "Largest lambda exponent kept")->check(CLI::NonNegativeNumber);

  auto* verify = add_common(app.add_subcommand("verify", "Run randomized property suites"));
  verify->add_option("suite", o.suite, "sl2, census, motive, stack, counting, gw or all")->required();
  verify->add_option("--seed", o.seed, "Run seed");
  verify->add_option("--cases", o.cases, "Cases per property (default: per-property counts)");
  verify->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report_error("Usage", e.what(), kUsage);
  }

  try {
    if (hst->parsed()) return cmd_hst(o);
    if (census->parsed()) return cmd_census(o);
    if (upsilon->parsed()) return cmd_upsilon(o);
    if (stack->parsed()) return cmd_stack(o);
    if (gv->parsed()) return cmd_gv(o);
    if (gw->parsed()) return cmd_gw(o);
    return cmd_verify(o);
  } catch (const CrossCheckFailure& e) {
    return report_error("CrossCheck", e.what(), kCrossCheck);
  } catch (const Error& e) {
    return report_error(std::string(to_string(e.kind())), e.what(), exit_code(e.kind()));
  } catch (const std::exception& e) {
    return report_error("Internal", e.what(), kCrossCheck);
  }
}
