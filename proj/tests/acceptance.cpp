// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Seeds, case counts and time limits are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gvmot/counting/eval_model.hpp"
#include "gvmot/error.hpp"
#include "gvmot/gwseries/transform.hpp"
#include "gvmot/io/json.hpp"
#include "gvmot/motives/motive.hpp"
#include "gvmot/verify/suites.hpp"

using namespace gvmot;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kHstSeconds = 10.0;
constexpr double kGwSeconds = 30.0;

std::string data_file(const std::string& name) { return std::string(GVMOT_DATA_DIR) + "/" + name; }

/// Runs the named property of a suite with at least min_cases cases and
/// returns a failure message, or nothing.
std::optional<std::string> property(const std::string& suite, const std::string& name, std::size_t min_cases) {
  for (const auto& p : verify::suite_properties(suite)) {
    if (p.name != name) continue;
    verify::RunOptions options;
    options.seed = kSeed;
    options.cases = std::max(min_cases, p.default_cases);
    auto report = verify::run_property(suite, p, options);
    if (report.cases < min_cases) return name + ": only " + std::to_string(report.cases) + " cases";
    if (!report.passed()) return name + ": " + report.counterexample;
    return std::nullopt;
  }
  return "no property named '" + name + "' in suite " + suite;
}

using Check = std::function<std::optional<std::string>()>;

/// Runs every check in order and stops at the first failure.
std::optional<std::string> all_of(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (auto failure = c()) return failure;
  }
  return std::nullopt;
}

std::optional<std::string> timed(double limit_seconds, const Check& check, double& elapsed) {
  auto start = std::chrono::steady_clock::now();
  auto failure = check();
  elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure) return failure;
  if (elapsed >= limit_seconds) {
    return "took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_seconds) + " s";
  }
  return std::nullopt;
}

std::optional<std::string> conifold_table() {
  auto doc = io::read_document(data_file("conifold.model.json"));
  auto model = io::count_model_from_json(doc.data);
  for (std::int64_t m = -3; m <= 3; ++m) {
    // A negative degree is read off the class (m[C], -1), the mirror of ((-m)[C], 1).
    auto p = counting::p_of_v(model.setup, counting::NumClass{{m}, m < 0 ? -1 : 1}, model.model);
    for (int g = 0; g <= 3; ++g) {
      BigInt n = counting::ng_from_p(p, g);
      BigInt want = (g == 0 && (m == 1 || m == -1)) ? 1 : 0;
      if (n != want) {
        return "n_" + std::to_string(g) + " at m=" + std::to_string(m) + " is " + n.get_str() + ", expected " +
               want.get_str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> worked_values() {
  LaurentPoly bundle_expected = LaurentPoly::s(1) + LaurentPoly::t(2) * LaurentPoly::s(1);
  const std::vector<std::pair<std::string, std::string>> cases{
      {"p2.betti.json", "s^2"},
      {"p1_bundle_over_p1.motive.json", to_string(bundle_expected)},
      {"p2_blowup_point.motive.json", "s^2 + t^2"},
  };
  for (const auto& [file, want] : cases) {
    auto doc = io::read_document(data_file(file));
    motives::MotiveExpr e = doc.kind == "betti_variety" ? io::betti_variety_from_json(doc.data) : io::motive_from_json(doc.data);
    auto got = to_string(motives::upsilon_rel(e));
    if (got != want) return file + " gives " + got + ", expected " + want;
  }
  return std::nullopt;
}

std::optional<std::string> conifold_gw() {
  gw::GVTable table;
  table.omega = {BigRational(1)};
  table.genus_max = 0;
  table.degree_cut = 10;
  table.add(0, {1}, BigInt(1));
  auto series = gw::gv_to_gw(table, BigRational(10), 0);
  for (long d = 1; d <= 10; ++d) {
    BigRational want(1, d * d * d);
    want.canonicalize();
    auto got = series.at({d}, -2);
    if (got != want) return "N_0 at d=" + std::to_string(d) + " is " + got.get_str();
  }
  return std::nullopt;
}

}  // namespace

int main() {
  struct Criterion {
    std::string label;
    std::function<std::optional<std::string>(double&)> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 HST decomposition equals the closed cell formula (1000 bispins, < 10 s)",
       [](double& t) {
         return timed(kHstSeconds, [] { return property("sl2", "hst_ng equals the closed cell formula", 1000); }, t);
       }},
      {"AC2 conifold GV table from the split-stratum model (|m| <= 3, g <= 3)",
       [](double& t) { return timed(1e9, conifold_table, t); }},
      {"AC3 worked values: P2, P1-bundle over P1, blow-up of P2 at a point",
       [](double& t) { return timed(1e9, worked_values, t); }},
      {"AC4 blow-up relation on 200 trees, m-degree equals twice the dimension",
       [](double& t) {
         return timed(1e9,
                      [] {
                        return all_of({[] { return property("motive", "blow-up relation", 200); },
                                       [] {
                                         return property("motive",
                                                         "m-degree of a geometric tree is twice its dimension", 200);
                                       }});
                      },
                      t);
       }},
      {"AC5 Betti shadow of the point class (20 random b2, b3 <= 100)",
       [](double& t) {
         return timed(
             1e9,
             [] {
               return property("counting", "point-class value of a Calabi-Yau threefold is its Poincare polynomial",
                               20);
             },
             t);
       }},
      {"AC6 conifold multiple covers 1/d^3 for d <= 10, round trip on 200 tables (< 30 s)",
       [](double& t) {
         return timed(kGwSeconds,
                      [] {
                        return all_of({conifold_gw, [] { return property("gw", "gw_to_gv inverts gv_to_gw", 200); }});
                      },
                      t);
       }},
      {"AC7 epsilon/delta round trip, eval kills commutators, asymmetric tables rejected",
       [](double& t) {
         return timed(
             1e9,
             [] {
               return all_of({
                   [] { return property("counting", "delta substituted into epsilon is the identity", 200); },
                   [] { return property("counting", "epsilon substituted into delta is the identity", 200); },
                   [] { return property("counting", "eval kills commutators", 200); },
                   [] { return property("counting", "asymmetric defect tables are rejected", 100); },
               });
             },
             t);
       }},
      {"AC8 Jordan census: conjugation invariance (100, dims <= 8), realized operator matches cells",
       [](double& t) {
         return timed(1e9,
                      [] {
                        return all_of({
                            [] { return property("census", "census is invariant under graded basis change", 100); },
                            [] {
                              return property("census", "census of the realized operator matches the bispin cells",
                                              200);
                            },
                        });
                      },
                      t);
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    double elapsed = 0;
    std::optional<std::string> failure;
    try {
      failure = c.run(elapsed);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++failed;
      std::printf("[FAIL] %s: %s\n", c.label.c_str(), failure->c_str());
    } else {
      std::printf("[PASS] %s (%.2f s)\n", c.label.c_str(), elapsed);
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
