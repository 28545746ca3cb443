// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gvmot/verify/generators.hpp"

namespace gvmot::verify {

struct RunOptions {
  std::uint64_t seed = 42;
  /// Overrides every property's default case count when nonzero.
  std::size_t cases = 0;
  unsigned threads = 1;
};

struct PropertyReport {
  std::string suite;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Shrunk first failure, in case-index order.
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

/// One randomized property. run(seed) generates a case from the seed,
/// checks it and, on failure, returns a minimized description.
struct Property {
  std::string name;
  std::size_t default_cases = 100;
  std::function<std::optional<std::string>(std::uint64_t)> run;
};

/// Wraps a generator, a checker returning an error message on failure, an
/// optional shrinker and a printer. Exceptions thrown by the checker count
/// as failures.
template <class Case>
Property make_property(std::string name, std::size_t cases, std::function<Case(Rng&)> generate,
                       std::function<std::optional<std::string>(const Case&)> check,
                       std::function<std::string(const Case&)> show,
                       std::function<std::vector<Case>(const Case&)> shrink = {}) {
  auto safe_check = [check](const Case& c) -> std::optional<std::string> {
    try {
      return check(c);
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  };
  Property p;
  p.name = std::move(name);
  p.default_cases = cases;
  p.run = [generate, safe_check, show, shrink](std::uint64_t seed) -> std::optional<std::string> {
    Rng rng(seed);
    Case c = generate(rng);
    auto failure = safe_check(c);
    if (!failure) return std::nullopt;
    for (int step = 0; shrink && step < 1000; ++step) {
      bool reduced = false;
      for (const auto& smaller : shrink(c)) {
        if (auto f = safe_check(smaller)) {
          c = smaller;
          failure = f;
          reduced = true;
          break;
        }
      }
      if (!reduced) break;
    }
    return show(c) + ": " + *failure;
  };
  return p;
}

/// Deterministic per-case seed derived from the run seed, the property name
/// and the case index.
std::uint64_t case_seed(std::uint64_t seed, const std::string& property, std::size_t index);

/// Runs all cases, fanning out over threads and reducing by case index.
PropertyReport run_property(const std::string& suite, const Property& p, const RunOptions& options);

std::vector<std::string> suite_names();

/// The properties of one suite; throws InvalidArgument for an unknown name.
std::vector<Property> suite_properties(const std::string& suite);

/// Runs one suite, or every suite for "all".
std::vector<PropertyReport> run_suite(const std::string& suite, const RunOptions& options);

}  // namespace gvmot::verify
