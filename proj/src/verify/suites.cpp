// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/verify/suites.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "gvmot/counting/hall.hpp"
#include "gvmot/error.hpp"
#include "gvmot/io/json.hpp"
#include "gvmot/lefschetz/bispin.hpp"
#include "gvmot/stacks/stack_class.hpp"

namespace gvmot::verify {

using counting::NumClass;
using lefschetz::BispinContent;
using lefschetz::SpinMultiset;
using motives::AbsMotive;
using motives::MotiveExpr;

std::uint64_t case_seed(std::uint64_t seed, const std::string& property, std::size_t index) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : property) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

PropertyReport run_property(const std::string& suite, const Property& p, const RunOptions& options) {
  PropertyReport report{suite, p.name, options.cases ? options.cases : p.default_cases, 0, {}};
  std::vector<std::optional<std::string>> outcomes(report.cases);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < outcomes.size(); i = next++) outcomes[i] = p.run(case_seed(options.seed, p.name, i));
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(report.cases)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i]) continue;
    if (report.failures++ == 0) report.counterexample = "case " + std::to_string(i) + ": " + *outcomes[i];
  }
  return report;
}

namespace {

std::string show_bispin(const BispinContent& v) { return "bispin " + io::to_json(v).dump(); }

std::vector<BispinContent> shrink_bispin(const BispinContent& v) {
  std::vector<BispinContent> out;
  for (const auto& [k, m] : v.entries()) {
    BispinContent without = v;
    without.add(k.two_jl, k.two_jr, -m);
    out.push_back(without);
    if (abs(m) > 1) {
      BispinContent smaller = v;
      smaller.add(k.two_jl, k.two_jr, BigInt(sgn(m) > 0 ? -1 : 1));
      out.push_back(smaller);
    }
  }
  return out;
}

std::string show_table(const gw::GVTable& t) { return "gv_table " + io::to_json(t).dump(); }

std::vector<gw::GVTable> shrink_table(const gw::GVTable& t) {
  std::vector<gw::GVTable> out;
  for (const auto& [key, n] : t.entries) {
    gw::GVTable without = t;
    without.entries.erase(key);
    out.push_back(without);
    if (abs(n) > 1) {
      gw::GVTable smaller = t;
      smaller.add(key.genus, key.beta, BigInt(sgn(n) > 0 ? -1 : 1));
      out.push_back(smaller);
    }
  }
  return out;
}

std::optional<std::string> expect_equal(const std::string& what, const std::string& got, const std::string& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + got + ", expected " + want;
}

SpinMultiset random_spins(Rng& rng, int max_two_j, int max_mult, bool virtual_ok) {
  SpinMultiset s;
  const auto terms = uniform(rng, 1, 4);
  for (std::int64_t i = 0; i < terms; ++i) {
    auto m = virtual_ok ? uniform(rng, -max_mult, max_mult) : uniform(rng, 1, max_mult);
    s.add(static_cast<int>(uniform(rng, 0, max_two_j)), BigInt(static_cast<long>(m)));
  }
  return s;
}

std::string show_spins(const SpinMultiset& s) {
  std::ostringstream out;
  out << "spins {";
  bool first = true;
  for (const auto& [two_j, m] : s.entries()) {
    out << (first ? "" : ", ") << two_j << "/2:" << m.get_str();
    first = false;
  }
  out << "}";
  return out.str();
}

/// Spins read off a census whose strings are centred at degree 0.
std::optional<SpinMultiset> centred_spins(const lefschetz::JordanCensus& c) {
  SpinMultiset out;
  for (const auto& [cell, n] : c.entries()) {
    if (cell.alpha != -(cell.length - 1)) return std::nullopt;
    out.add(cell.length - 1, n);
  }
  return out;
}

BispinContent bounded_bispin(Rng& rng) {
  // Keeps every graded piece of the realization at dimension <= 8.
  for (;;) {
    BispinContent v = random_bispin(rng, 3, 2, 3, false);
    auto x = lefschetz::realize_right_action(v);
    if (std::all_of(x.dims().begin(), x.dims().end(), [](const auto& kv) { return kv.second <= 8; })) return v;
  }
}

std::vector<Property> sl2_properties() {
  std::vector<Property> ps;
  ps.push_back(make_property<SpinMultiset>(
      "spin_decompose inverts the character", 500, [](Rng& rng) { return random_spins(rng, 8, 5, false); },
      [](const SpinMultiset& s) -> std::optional<std::string> {
        if (lefschetz::spin_decompose(s.character()) == s) return std::nullopt;
        return std::string("round trip differs");
      },
      show_spins));
  ps.push_back(make_property<std::pair<SpinMultiset, SpinMultiset>>(
      "tensor multiplies dimensions", 500,
      [](Rng& rng) { return std::make_pair(random_spins(rng, 6, 4, true), random_spins(rng, 6, 4, true)); },
      [](const auto& xy) {
        return expect_equal("dimension", lefschetz::tensor(xy.first, xy.second).dimension().get_str(),
                            BigInt(xy.first.dimension() * xy.second.dimension()).get_str());
      },
      [](const auto& xy) { return show_spins(xy.first) + " x " + show_spins(xy.second); }));
  ps.push_back(make_property<BispinContent>(
      "hst_decompose reconstructs the input", 300, [](Rng& rng) { return random_bispin(rng, 6, 5, 5, true); },
      [](const BispinContent& v) -> std::optional<std::string> {
        BispinContent rebuilt;
        for (const auto& [g, r] : lefschetz::hst_decompose(v)) {
          const auto piece = lefschetz::outer(lefschetz::i_g(g), r);
          for (const auto& [k, m] : piece.entries()) rebuilt.add(k.two_jl, k.two_jr, m);
        }
        if (rebuilt == v) return std::nullopt;
        return "sum of I_g (x) R_g is " + io::to_json(rebuilt).dump();
      },
      show_bispin, shrink_bispin));
  ps.push_back(make_property<BispinContent>(
      "hst_ng equals the closed cell formula", 1000, [](Rng& rng) { return random_bispin(rng, 6, 5, 5, false); },
      [](const BispinContent& v) -> std::optional<std::string> {
        auto census = lefschetz::census_from_bispin(v);
        for (int g = 0; g <= 5; ++g) {
          auto a = lefschetz::hst_ng(v, g);
          auto b = lefschetz::alt_ng(census, g);
          if (a != b) return "g=" + std::to_string(g) + ": hst " + a.get_str() + " vs cells " + b.get_str();
        }
        return std::nullopt;
      },
      show_bispin, shrink_bispin));
  return ps;
}

std::vector<Property> census_properties() {
  std::vector<Property> ps;
  ps.push_back(make_property<std::pair<BispinContent, std::uint64_t>>(
      "census is invariant under graded basis change", 100,
      [](Rng& rng) { return std::make_pair(bounded_bispin(rng), rng()); },
      [](const auto& c) -> std::optional<std::string> {
        Rng rng(c.second);
        auto x = lefschetz::realize_right_action(c.first);
        auto y = x.conjugate(random_basis_change(rng, x));
        if (lefschetz::jordan_census(x) == lefschetz::jordan_census(y)) return std::nullopt;
        return std::string("census changed under conjugation");
      },
      [](const auto& c) { return show_bispin(c.first) + " basis seed " + std::to_string(c.second); },
      [](const auto& c) {
        std::vector<std::pair<BispinContent, std::uint64_t>> out;
        for (auto& v : shrink_bispin(c.first)) out.emplace_back(v, c.second);
        return out;
      }));
  ps.push_back(make_property<BispinContent>(
      "census of the realized operator matches the bispin cells", 200, bounded_bispin,
      [](const BispinContent& v) -> std::optional<std::string> {
        auto from_ranks = lefschetz::jordan_census(lefschetz::realize_right_action(v));
        auto direct = lefschetz::census_from_bispin(v);
        if (from_ranks == direct) return std::nullopt;
        return "ranks give " + io::to_json(from_ranks).dump() + ", cells give " + io::to_json(direct).dump();
      },
      show_bispin, shrink_bispin));
  ps.push_back(make_property<BispinContent>(
      "cell lengths add up to the dimension", 200, bounded_bispin,
      [](const BispinContent& v) {
        auto x = lefschetz::realize_right_action(v);
        return expect_equal("dimension", lefschetz::jordan_census(x).total_dimension().get_str(),
                            std::to_string(x.total_dimension()));
      },
      show_bispin, shrink_bispin));
  ps.push_back(make_property<std::pair<SpinMultiset, std::uint64_t>>(
      "two Lefschetz operators give the same spins", 100,
      [](Rng& rng) { return std::make_pair(random_spins(rng, 6, 2, false), rng()); },
      [](const auto& c) -> std::optional<std::string> {
        Rng rng(c.second);
        BispinContent v;
        for (const auto& [two_j, m] : c.first.entries()) v.add(0, two_j, m);
        auto first = lefschetz::realize_right_action(v);
        // A second operator: a multiple of the first in another graded basis.
        std::map<int, Matrix> doubled;
        for (const auto& [deg, m] : first.maps()) {
          Matrix twice = m;
          for (std::size_t r = 0; r < twice.rows(); ++r) {
            for (std::size_t col = 0; col < twice.cols(); ++col) twice(r, col) *= 2;
          }
          doubled.emplace(deg, twice);
        }
        lefschetz::GradedNilpotent second(first.dims(), std::move(doubled));
        second = second.conjugate(random_basis_change(rng, second));
        auto a = centred_spins(lefschetz::jordan_census(first));
        auto b = centred_spins(lefschetz::jordan_census(second));
        if (!a || !b) return std::string("strings are not centred");
        if (*a != *b) return std::string("spins differ");
        lefschetz::GradedDims dims;
        for (const auto& [deg, d] : first.dims()) dims[deg] = static_cast<unsigned long>(d);
        if (*a != lefschetz::spin_decompose(dims)) return std::string("spins differ from spin_decompose");
        return std::nullopt;
      },
      [](const auto& c) { return show_spins(c.first); }));
  return ps;
}

std::string show_motive_value(const MotiveExpr& e) { return "tree with value " + to_string(motives::upsilon_rel(e)); }

std::vector<Property> motive_properties() {
  std::vector<Property> ps;
  struct BlowUpCase {
    MotiveExpr ambient;
    MotiveExpr center;
    int r;
  };
  ps.push_back(make_property<BlowUpCase>(
      "blow-up relation", 200,
      [](Rng& rng) {
        auto r = static_cast<int>(uniform(rng, 2, 4));
        auto center = random_geometric_tree(rng, static_cast<int>(uniform(rng, 0, 2)));
        auto ambient = raise_dimension(random_geometric_tree(rng, static_cast<int>(uniform(rng, 0, 3))), *center.dim() + r);
        center = raise_dimension(center, *ambient.dim() - r);
        return BlowUpCase{ambient, center, r};
      },
      [](const BlowUpCase& c) -> std::optional<std::string> {
        if (motives::blowup_relation_check(c.ambient, c.center, c.r)) return std::nullopt;
        return std::string("relation fails");
      },
      [](const BlowUpCase& c) {
        return "ambient " + to_string(motives::upsilon_rel(c.ambient)) + ", centre " +
               to_string(motives::upsilon_rel(c.center)) + ", r=" + std::to_string(c.r);
      }));
  ps.push_back(make_property<MotiveExpr>(
      "m-degree of a geometric tree is twice its dimension", 200,
      [](Rng& rng) { return random_geometric_tree(rng, static_cast<int>(uniform(rng, 0, 4))); },
      [](const MotiveExpr& e) -> std::optional<std::string> {
        if (!motives::is_geometric(e)) return std::string("generated tree is not geometric");
        return expect_equal("m-degree", std::to_string(m_degree(motives::upsilon_rel(e))), std::to_string(2 * *e.dim()));
      },
      show_motive_value));
  ps.push_back(make_property<MotiveExpr>(
      "finite pushforward keeps the value", 100,
      [](Rng& rng) { return random_geometric_tree(rng, static_cast<int>(uniform(rng, 0, 3))); },
      [](const MotiveExpr& e) -> std::optional<std::string> {
        if (motives::upsilon_rel(MotiveExpr::finite_push(e)) == motives::upsilon_rel(e)) return std::nullopt;
        return std::string("value changed");
      },
      show_motive_value));
  struct ProductCase {
    AbsMotive f1;
    AbsMotive f2;
    MotiveExpr a;
    MotiveExpr b;
  };
  ps.push_back(make_property<ProductCase>(
      "absolute products are bilinear", 100,
      [](Rng& rng) {
        auto f = [&] {
          LaurentPoly p;
          for (int k = 0; k <= 3; ++k) p += LaurentPoly::t(2 * k) * BigInt(static_cast<long>(uniform(rng, -2, 3)));
          if (p.is_zero()) p = LaurentPoly(1);
          return AbsMotive::from_poly(p);
        };
        return ProductCase{f(), f(), random_geometric_tree(rng, 2), random_geometric_tree(rng, 2)};
      },
      [](const ProductCase& c) -> std::optional<std::string> {
        using motives::upsilon_rel;
        auto left = upsilon_rel(MotiveExpr::product(c.f1, MotiveExpr::sum(c.a, c.b)));
        auto right = upsilon_rel(MotiveExpr::product(c.f1, c.a)) + upsilon_rel(MotiveExpr::product(c.f1, c.b));
        if (left != right) return std::string("not additive in the relative class");
        auto sum_factor = c.f1.value + c.f2.value;
        if (sum_factor.is_zero()) return std::nullopt;
        auto lhs = upsilon_rel(MotiveExpr::product(AbsMotive::from_poly(sum_factor), c.a));
        auto rhs = upsilon_rel(MotiveExpr::product(c.f1, c.a)) + upsilon_rel(MotiveExpr::product(c.f2, c.a));
        if (lhs != rhs) return std::string("not additive in the absolute class");
        return std::nullopt;
      },
      [](const ProductCase& c) { return "factors " + to_string(c.f1.value) + ", " + to_string(c.f2.value); }));
  ps.push_back(make_property<std::vector<BigInt>>(
      "point-base atoms have only length-one cells", 100,
      [](Rng& rng) {
        auto d = uniform(rng, 0, 4);
        std::vector<BigInt> b(static_cast<std::size_t>(2 * d + 1));
        for (std::int64_t i = 0; i <= d; ++i) {
          b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(2 * d - i)] = static_cast<long>(uniform(rng, 0, 50));
        }
        return b;
      },
      [](const std::vector<BigInt>& b) -> std::optional<std::string> {
        auto value = motives::upsilon_rel(motives::point_base_from_betti(b));
        LaurentPoly expected;
        for (std::size_t i = 0; i < b.size(); ++i) expected += LaurentPoly::t(static_cast<std::int64_t>(i)) * b[i];
        if (!value.is_t_only()) return std::string("value involves s");
        return expect_equal("value", to_string(value), to_string(expected));
      },
      [](const std::vector<BigInt>& b) {
        std::string out = "bettis";
        for (const auto& x : b) out += " " + x.get_str();
        return out;
      }));
  return ps;
}

std::vector<Property> stack_properties() {
  std::vector<Property> ps;
  const RationalFn gm = RationalFn(AbsMotive::gm().value);
  ps.push_back(make_property<MotiveExpr>(
      "(L - 1) times the Gm quotient gives back the value", 100,
      [](Rng& rng) { return random_geometric_tree(rng, static_cast<int>(uniform(rng, 0, 3))); },
      [gm](const MotiveExpr& e) -> std::optional<std::string> {
        auto q = stacks::upsilon_stack(stacks::quotient_by_special_group(e, AbsMotive::gm()));
        if (gm * q == RationalFn(motives::upsilon_rel(e))) return std::nullopt;
        return "got " + to_string(gm * q);
      },
      show_motive_value));
  ps.push_back(make_property<std::pair<MotiveExpr, MotiveExpr>>(
      "upsilon_stack is additive", 100,
      [](Rng& rng) { return std::make_pair(random_geometric_tree(rng, 2), random_geometric_tree(rng, 2)); },
      [](const auto& c) -> std::optional<std::string> {
        auto x = stacks::quotient_by_special_group(c.first, AbsMotive::gl(2));
        auto y = stacks::quotient_by_special_group(c.second, AbsMotive::gm());
        if (stacks::upsilon_stack(x + y) == stacks::upsilon_stack(x) + stacks::upsilon_stack(y)) return std::nullopt;
        return std::string("sum of values differs");
      },
      [](const auto& c) { return show_motive_value(c.first) + " and " + show_motive_value(c.second); }));
  ps.push_back(make_property<std::pair<MotiveExpr, int>>(
      "scaling by a variety multiplies the value", 100,
      [](Rng& rng) { return std::make_pair(random_geometric_tree(rng, 2), static_cast<int>(uniform(rng, 0, 3))); },
      [](const auto& c) -> std::optional<std::string> {
        auto cls = stacks::quotient_by_special_group(c.first, AbsMotive::gm());
        auto t = AbsMotive::affine(c.second);
        if (stacks::upsilon_stack(stacks::scale_by_variety(t, cls)) == RationalFn(t.value) * stacks::upsilon_stack(cls)) {
          return std::nullopt;
        }
        return std::string("scaled value differs");
      },
      [](const auto& c) { return show_motive_value(c.first) + " times A^" + std::to_string(c.second); }));
  return ps;
}

struct ConeCase {
  std::uint64_t seed;
  int max_degree;
};

std::string show_cone(const counting::CountingSetup& setup, const NumClass& v) {
  std::string out = "generators";
  for (const auto& g : setup.lattice().generators()) out += " (" + counting::to_key(g) + ")";
  out += " omega";
  for (const auto& w : setup.charge().omega) out += " " + w.get_str();
  out += " B";
  for (const auto& b : setup.charge().b_field) out += " " + b.get_str();
  return out + " class " + counting::to_key(v);
}

struct ConeDraw {
  counting::CountingSetup setup;
  NumClass v;
};

ConeDraw draw_cone(const ConeCase& c) {
  Rng rng(c.seed);
  auto setup = random_setup(rng, 3, uniform(rng, 0, 1) == 0);
  auto v = random_effective_class(rng, setup, c.max_degree, uniform(rng, 0, 1) ? 0 : 2);
  return {setup, v};
}

std::vector<ConeCase> shrink_cone(const ConeCase& c) {
  if (c.max_degree <= 1) return {};
  return {ConeCase{c.seed, c.max_degree - 1}};
}

std::vector<Property> counting_properties() {
  std::vector<Property> ps;
  auto gen_cone = [](Rng& rng) { return ConeCase{rng(), 5}; };
  auto show = [](const ConeCase& c) {
    auto d = draw_cone(c);
    return show_cone(d.setup, d.v);
  };
  ps.push_back(make_property<ConeCase>(
      "delta substituted into epsilon is the identity", 200, gen_cone,
      [](const ConeCase& c) -> std::optional<std::string> {
        auto [setup, v] = draw_cone(c);
        auto composed = counting::substitute(counting::delta_from_epsilon(setup, v),
                                             [&](const NumClass& u) { return counting::epsilon_formal(setup, u); });
        auto letter = counting::FreeHallElement::letter(counting::Alphabet::Delta, v);
        if (composed == letter) return std::nullopt;
        return "got " + counting::to_string(composed);
      },
      show, shrink_cone));
  ps.push_back(make_property<ConeCase>(
      "epsilon substituted into delta is the identity", 200, gen_cone,
      [](const ConeCase& c) -> std::optional<std::string> {
        auto [setup, v] = draw_cone(c);
        auto composed = counting::substitute(counting::epsilon_formal(setup, v),
                                             [&](const NumClass& u) { return counting::delta_from_epsilon(setup, u); });
        auto letter = counting::FreeHallElement::letter(counting::Alphabet::Epsilon, v);
        if (composed == letter) return std::nullopt;
        return "got " + counting::to_string(composed);
      },
      show, shrink_cone));

  struct WordCase {
    std::uint64_t seed;
  };
  struct WordDraw {
    std::vector<NumClass> classes;
    counting::FreeHallElement f1;
    counting::FreeHallElement f2;
  };
  auto draw_words = [](std::uint64_t seed) {
    Rng rng(seed);
    auto setup = random_setup(rng, 2, false);
    std::vector<NumClass> classes;
    const auto n = uniform(rng, 2, 4);
    for (std::int64_t i = 0; i < n; ++i) {
      auto v = random_effective_class(rng, setup, 4, 2);
      if (std::find(classes.begin(), classes.end(), v) == classes.end()) classes.push_back(v);
    }
    auto element = [&] {
      counting::FreeHallElement f;
      const auto terms = uniform(rng, 1, 2);
      for (std::int64_t t = 0; t < terms; ++t) {
        counting::Word w;
        const auto len = uniform(rng, 1, 3);
        for (std::int64_t i = 0; i < len; ++i) {
          w.push_back(classes[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(classes.size()) - 1))]);
        }
        auto num = uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1);
        BigRational coeff(num, uniform(rng, 1, 3));
        coeff.canonicalize();
        f.add(w, coeff);
      }
      return f;
    };
    WordDraw d{classes, element(), element()};
    return std::make_pair(d, random_eval_model(rng, classes));
  };
  auto show_words = [draw_words](const WordCase& c) {
    auto [d, model] = draw_words(c.seed);
    return counting::to_string(d.f1) + " and " + counting::to_string(d.f2);
  };
  ps.push_back(make_property<WordCase>(
      "eval kills commutators", 200, [](Rng& rng) { return WordCase{rng()}; },
      [draw_words](const WordCase& c) -> std::optional<std::string> {
        auto [d, model] = draw_words(c.seed);
        auto commutator = d.f1 * d.f2 - d.f2 * d.f1;
        auto value = counting::eval(commutator, model);
        if (value.is_zero()) return std::nullopt;
        return "eval of the commutator is " + to_string(value);
      },
      show_words));
  ps.push_back(make_property<WordCase>(
      "eval ignores the order of letters", 200, [](Rng& rng) { return WordCase{rng()}; },
      [draw_words](const WordCase& c) -> std::optional<std::string> {
        auto [d, model] = draw_words(c.seed);
        for (const auto& [w, coeff] : d.f1.terms()) {
          counting::Word reversed(w.rbegin(), w.rend());
          counting::Word rotated = w;
          std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
          auto base = counting::eval_word(w, model);
          if (counting::eval_word(reversed, model) != base || counting::eval_word(rotated, model) != base) {
            return std::string("word value depends on letter order");
          }
        }
        return std::nullopt;
      },
      show_words));
  ps.push_back(make_property<WordCase>(
      "asymmetric defect tables are rejected", 100, [](Rng& rng) { return WordCase{rng()}; },
      [](const WordCase& c) -> std::optional<std::string> {
        Rng rng(c.seed);
        auto setup = random_setup(rng, 2, false);
        NumClass a = random_effective_class(rng, setup, 4, 2);
        NumClass b = a + a;
        auto e = uniform(rng, -3, 3);
        std::vector<counting::ExtDefectEntry> ext{{a, b, BigInt(static_cast<long>(e))},
                                                  {b, a, BigInt(static_cast<long>(e + uniform(rng, 1, 3)))}};
        try {
          counting::EvalModel model({}, ext);
        } catch (const Error& err) {
          if (err.kind() == ErrorKind::AsymmetricExtDefect) return std::nullopt;
          throw;
        }
        return std::string("asymmetric table accepted");
      },
      [](const WordCase& c) { return "seed " + std::to_string(c.seed); }));
  ps.push_back(make_property<WordCase>(
      "classes (beta, 1) do not split when B = 0", 100, [](Rng& rng) { return WordCase{rng()}; },
      [](const WordCase& c) -> std::optional<std::string> {
        Rng rng(c.seed);
        auto setup = random_setup(rng, 3, true);
        NumClass v = random_effective_class(rng, setup, 5, 0);
        if (v.beta_is_zero()) return std::nullopt;
        v.k = 1;
        auto eps = counting::epsilon_formal(setup, v);
        if (eps == counting::FreeHallElement::letter(counting::Alphabet::Delta, v)) return std::nullopt;
        return "epsilon is " + counting::to_string(eps);
      },
      [](const WordCase& c) { return "seed " + std::to_string(c.seed); }));
  ps.push_back(make_property<std::pair<long, long>>(
      "point-class value of a Calabi-Yau threefold is its Poincare polynomial", 20,
      [](Rng& rng) { return std::make_pair(static_cast<long>(uniform(rng, 0, 100)), static_cast<long>(uniform(rng, 0, 100))); },
      [](const auto& b) -> std::optional<std::string> {
        std::vector<BigInt> bettis{1, 0, b.first, b.second, b.first, 0, 1};
        auto x = motives::point_base_from_betti(bettis);
        counting::CountingSetup setup(counting::ClassLattice(1, {{1}}), counting::CentralCharge{{0}, {1}});
        NumClass point{{0}, 1};
        counting::EvalModel model({{point, stacks::quotient_by_special_group(x, AbsMotive::gm())}}, {});
        auto p = counting::p_of_v(setup, point, model);
        LaurentPoly expected;
        for (std::size_t i = 0; i < bettis.size(); ++i) expected += LaurentPoly::t(static_cast<std::int64_t>(i)) * bettis[i];
        if (p == RationalFn(expected)) return std::nullopt;
        return "P is " + to_string(p);
      },
      [](const auto& b) { return "b2=" + std::to_string(b.first) + " b3=" + std::to_string(b.second); }));
  return ps;
}

/// (2 sin(k lambda / 2))^{2g-2} expanded directly as a series in lambda,
/// returned as exponent -> coefficient up to lambda^{max_exp}.
std::map<int, BigRational> direct_two_sin_power(int g, long k, int max_exp) {
  // 2 sin(k lambda / 2) / lambda = sum_m (-1)^m k^{2m+1} lambda^{2m} / (2^{2m} (2m+1)!).
  const int n = max_exp + 3;
  std::vector<BigRational> base(static_cast<std::size_t>(n), BigRational(0));
  for (int m = 0; 2 * m < n; ++m) {
    BigRational c = power(BigRational(k), static_cast<std::uint64_t>(2 * m + 1)) /
                    (power(BigRational(4), static_cast<std::uint64_t>(m)) * BigRational(factorial(2 * m + 1)));
    base[static_cast<std::size_t>(2 * m)] = m % 2 == 0 ? c : BigRational(-c);
  }
  auto mul = [n](const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
    std::vector<BigRational> out(static_cast<std::size_t>(n), BigRational(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return out;
  };
  std::vector<BigRational> acc(static_cast<std::size_t>(n), BigRational(0));
  acc[0] = 1;
  const int e = 2 * g - 2;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) acc = mul(acc, base);
  if (e < 0) {
    std::vector<BigRational> inv(static_cast<std::size_t>(n), BigRational(0));
    inv[0] = 1 / acc[0];
    for (int m = 1; m < n; ++m) {
      BigRational s = 0;
      for (int j = 1; j <= m; ++j) s += acc[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(m - j)];
      inv[static_cast<std::size_t>(m)] = -s / acc[0];
    }
    acc = inv;
  }
  std::map<int, BigRational> out;
  for (int i = 0; i < n; ++i) {
    if (e + i <= max_exp && sgn(acc[static_cast<std::size_t>(i)]) != 0) out[e + i] = acc[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<Property> gw_properties() {
  std::vector<Property> ps;
  ps.push_back(make_property<gw::GVTable>(
      "gw_to_gv inverts gv_to_gw", 200, [](Rng& rng) { return random_gv_table(rng, 6, 3); },
      [](const gw::GVTable& t) -> std::optional<std::string> {
        auto series = gw::gv_to_gw(t, BigRational(6), 4);
        auto back = gw::gw_to_gv(series, 3);
        if (!back.non_integral.empty()) return std::string("non-integral values in the inverse");
        if (back.table.entries == t.entries) return std::nullopt;
        return "inverse is " + io::to_json(back.table).dump();
      },
      show_table, shrink_table));
  ps.push_back(make_property<std::pair<gw::GVTable, gw::GVTable>>(
      "gv_to_gw is linear", 100,
      [](Rng& rng) {
        auto a = random_gv_table(rng, 5, 2);
        auto b = random_gv_table(rng, 5, 2);
        b.omega = a.omega;
        gw::GVTable bb = a;
        bb.entries.clear();
        for (const auto& [key, n] : b.entries) {
          auto beta = key.beta;
          beta.resize(a.omega.size(), 0);
          BigRational d = 0;
          for (std::size_t i = 0; i < beta.size(); ++i) d += a.omega[i] * static_cast<long>(beta[i]);
          if (sgn(d) > 0) bb.add(key.genus, beta, n);
        }
        return std::make_pair(a, bb);
      },
      [](const auto& ab) -> std::optional<std::string> {
        gw::GVTable sum = ab.first;
        for (const auto& [key, n] : ab.second.entries) sum.add(key.genus, key.beta, n);
        auto s = gw::gv_to_gw(sum, BigRational(5), 2);
        auto x = gw::gv_to_gw(ab.first, BigRational(5), 2);
        auto y = gw::gv_to_gw(ab.second, BigRational(5), 2);
        for (const auto& [key, c] : y.coeffs) x.add(key.beta, key.lambda_exp, c);
        if (x.coeffs == s.coeffs) return std::nullopt;
        return std::string("transform of the sum differs from the sum of transforms");
      },
      [](const auto& ab) { return show_table(ab.first) + " + " + show_table(ab.second); }));
  ps.push_back(make_property<int>(
      "sine power coefficients scale as k^(2g-2+2m)", 1, [](Rng&) { return 0; },
      [](const int&) -> std::optional<std::string> {
        const int order = 4;
        for (int g = 0; g <= 3; ++g) {
          auto c = gw::two_sin_power_coefficients(g, order);
          for (long k = 1; k <= 5; ++k) {
            auto direct = direct_two_sin_power(g, k, 2 * g - 2 + 2 * order);
            for (int m = 0; m <= order; ++m) {
              const int e = 2 * g - 2 + 2 * m;
              BigRational scaled = c[static_cast<std::size_t>(m)] * power(BigRational(k), static_cast<std::int64_t>(e));
              BigRational want = direct.contains(e) ? direct[e] : BigRational(0);
              if (scaled != want) {
                return "g=" + std::to_string(g) + " k=" + std::to_string(k) + " lambda^" + std::to_string(e) + ": " +
                       scaled.get_str() + " vs " + want.get_str();
              }
            }
          }
        }
        return std::nullopt;
      },
      [](const int&) { return std::string("g <= 3, k <= 5"); }));
  return ps;
}

}  // namespace

std::vector<std::string> suite_names() { return {"sl2", "census", "motive", "stack", "counting", "gw"}; }

std::vector<Property> suite_properties(const std::string& suite) {
  if (suite == "sl2") return sl2_properties();
  if (suite == "census") return census_properties();
  if (suite == "motive") return motive_properties();
  if (suite == "stack") return stack_properties();
  if (suite == "counting") return counting_properties();
  if (suite == "gw") return gw_properties();
  fail(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
}

std::vector<PropertyReport> run_suite(const std::string& suite, const RunOptions& options) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  std::vector<std::pair<std::string, std::vector<Property>>> selected;
  for (const auto& name : names) selected.emplace_back(name, suite_properties(name));
  std::vector<PropertyReport> reports;
  for (const auto& [name, properties] : selected) {
    for (const auto& p : properties) reports.push_back(run_property(name, p, options));
  }
  return reports;
}

}  // namespace gvmot::verify
