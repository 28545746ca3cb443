// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <functional>
#include <vector>

#include "gvmot/counting/eval_model.hpp"
#include "gvmot/counting/hall.hpp"
#include "gvmot/counting/lattice.hpp"
#include "gvmot/error.hpp"
#include "support.hpp"

using namespace gvmot;
using namespace gvmot::counting;
using namespace gvmot::testing;
using motives::AbsMotive;

namespace {

template <class F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

CountingSetup unit_cone(std::size_t rank, std::vector<BigRational> omega, std::vector<BigRational> b = {}) {
  std::vector<CurveClass> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    CurveClass e(rank, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  if (b.empty()) b.assign(rank, BigRational(0));
  return CountingSetup(ClassLattice(rank, gens), CentralCharge{b, omega});
}

/// Pieces of the same phase as v inside the box 0 <= beta' <= beta,
/// |k'| <= k_bound, found by testing every candidate with exact arithmetic.
/// Valid for cones generated by the unit vectors.
std::vector<NumClass> brute_pieces(const CountingSetup& setup, const NumClass& v, std::int64_t k_bound) {
  const auto& z = setup.charge();
  std::vector<NumClass> out;
  CurveClass beta(v.beta.size(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == beta.size()) {
      for (std::int64_t k = -k_bound; k <= k_bound; ++k) {
        NumClass u{beta, k};
        bool zero_beta = std::all_of(beta.begin(), beta.end(), [](std::int64_t x) { return x == 0; });
        if (zero_beta && k < 1) continue;
        BigRational cross = z.re(u) * z.im(v) - z.im(u) * z.re(v);
        BigRational dot = z.re(u) * z.re(v) + z.im(u) * z.im(v);
        if (cross == 0 && dot > 0) out.push_back(u);
      }
      return;
    }
    for (std::int64_t x = 0; x <= v.beta[i]; ++x) {
      beta[i] = x;
      walk(i + 1);
    }
  };
  walk(0);
  return out;
}

/// Ordered compositions of v into the given pieces, with coefficient
/// weight(n) for a composition of length n.
FreeHallElement brute_expansion(const std::vector<NumClass>& pieces, const NumClass& v, Alphabet alphabet,
                                const std::function<BigRational(long)>& weight) {
  // Starting from a zeroed letter fixes the alphabet of the result.
  FreeHallElement out = FreeHallElement::letter(alphabet, v) * BigRational(0);
  Word w;
  std::function<void(const NumClass&)> rec = [&](const NumClass& rest) {
    bool done = std::all_of(rest.beta.begin(), rest.beta.end(), [](std::int64_t x) { return x == 0; }) && rest.k == 0;
    if (done) {
      out.add(w, weight(static_cast<long>(w.size())));
      return;
    }
    for (const auto& p : pieces) {
      NumClass next = rest - p;
      // A partial remainder is itself a sum of same-phase pieces.
      bool zero = std::all_of(next.beta.begin(), next.beta.end(), [](std::int64_t x) { return x == 0; }) && next.k == 0;
      if (!zero && std::find(pieces.begin(), pieces.end(), next) == pieces.end()) continue;
      w.push_back(p);
      rec(next);
      w.pop_back();
    }
  };
  rec(v);
  return out;
}

BigRational eps_weight(long n) { return BigRational(n % 2 == 1 ? 1 : -1, n); }
BigRational delta_weight(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return BigRational(BigInt(1), f);
}

stacks::StackClass point_over_gm() {
  return stacks::quotient_by_special_group(motives::smooth_from_betti({BigInt(1)}), AbsMotive::gm());
}

}  // namespace

TEST_CASE("class keys") {
  CHECK(to_key(NumClass{{1, -2}, 3}) == "1,-2;3");
  CHECK(parse_class_key("1,-2;3") == NumClass{{1, -2}, 3});
  CHECK(error_kind_of([] { parse_class_key("1,2"); }) == ErrorKind::Schema);
  CHECK(error_kind_of([] { parse_class_key("1;1", 2); }) == ErrorKind::Schema);
}

TEST_CASE("phases") {
  auto setup = unit_cone(1, {BigRational(1)});
  const auto& z = setup.charge();
  CHECK(phase(z, NumClass{{0}, 1}).exact_value() == BigRational(1));
  CHECK(phase(z, NumClass{{2}, 0}).exact_value() == BigRational(1, 2));
  auto p = phase(z, NumClass{{1}, 1});
  CHECK_FALSE(p.exact_value().has_value());
  CHECK(phase(z, NumClass{{2}, 0}) < p);
  CHECK(p < phase(z, NumClass{{0}, 1}));
  CHECK(phase(z, NumClass{{1}, 1}) == phase(z, NumClass{{2}, 2}));
  CHECK_FALSE(phase(z, NumClass{{1}, 1}).in_upper_half() == phase(z, NumClass{{-1}, -1}).in_upper_half());
  CHECK(error_kind_of([&] { (void)phase(z, NumClass{{0}, 0}); }) == ErrorKind::ZeroCharge);
}

TEST_CASE("charges must be positive on the cone") {
  CHECK(error_kind_of([] { unit_cone(2, {BigRational(1), BigRational(0)}); }) == ErrorKind::ConeNotPointed);
  CHECK(error_kind_of([] { ClassLattice(1, {{0}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("epsilon_formal on small cones") {
  auto setup = unit_cone(1, {BigRational(1)});
  NumClass e{{1}, 0};
  CHECK(epsilon_formal(setup, e) == FreeHallElement::letter(Alphabet::Delta, e));

  NumClass two_e{{2}, 0};
  auto expected = FreeHallElement::letter(Alphabet::Delta, two_e) -
                  FreeHallElement::letter(Alphabet::Delta, e) * FreeHallElement::letter(Alphabet::Delta, e) *
                      BigRational(1, 2);
  CHECK(epsilon_formal(setup, two_e) == expected);
  CHECK(epsilon_formal(setup, two_e) ==
        brute_expansion(brute_pieces(setup, two_e, 4), two_e, Alphabet::Delta, eps_weight));

  NumClass v{{1}, 1};
  CHECK(epsilon_formal(setup, v) == FreeHallElement::letter(Alphabet::Delta, v));
  CHECK(error_kind_of([&] { epsilon_formal(setup, NumClass{{-1}, 0}); }) == ErrorKind::NotEffective);
}

TEST_CASE("epsilon_formal matches brute-force compositions") {
  std::vector<std::pair<CountingSetup, NumClass>> cases{
      {unit_cone(2, {BigRational(1), BigRational(1)}), NumClass{{1, 1}, 0}},
      {unit_cone(2, {BigRational(1), BigRational(2)}), NumClass{{2, 1}, 2}},
      {unit_cone(1, {BigRational(1)}, {BigRational(1, 2)}), NumClass{{2}, 1}},
      {unit_cone(1, {BigRational(1)}), NumClass{{0}, 3}},
      {unit_cone(3, {BigRational(1), BigRational(1), BigRational(1)}), NumClass{{1, 1, 1}, 0}},
  };
  for (const auto& [setup, v] : cases) {
    auto pieces = brute_pieces(setup, v, 6);
    CHECK(epsilon_formal(setup, v) == brute_expansion(pieces, v, Alphabet::Delta, eps_weight));
    CHECK(delta_from_epsilon(setup, v) == brute_expansion(pieces, v, Alphabet::Epsilon, delta_weight));
  }
}

TEST_CASE("delta_from_epsilon") {
  auto setup = unit_cone(1, {BigRational(1)});
  NumClass e{{1}, 0}, two_e{{2}, 0};
  CHECK(delta_from_epsilon(setup, e) == FreeHallElement::letter(Alphabet::Epsilon, e));
  auto expected = FreeHallElement::letter(Alphabet::Epsilon, two_e) +
                  FreeHallElement::letter(Alphabet::Epsilon, e) * FreeHallElement::letter(Alphabet::Epsilon, e) *
                      BigRational(1, 2);
  CHECK(delta_from_epsilon(setup, two_e) == expected);
  auto round = substitute(delta_from_epsilon(setup, NumClass{{3}, 0}),
                          [&](const NumClass& u) { return epsilon_formal(setup, u); });
  CHECK(round == FreeHallElement::letter(Alphabet::Delta, NumClass{{3}, 0}));
}

TEST_CASE("alphabets do not mix") {
  NumClass e{{1}, 0};
  CHECK(error_kind_of([&] {
          (void)(FreeHallElement::letter(Alphabet::Delta, e) + FreeHallElement::letter(Alphabet::Epsilon, e));
        }) == ErrorKind::InvalidArgument);
}

TEST_CASE("composition cap") {
  CountingSetup setup(ClassLattice(1, {{1}}), CentralCharge{{BigRational(0)}, {BigRational(1)}}, 10);
  CHECK(error_kind_of([&] { epsilon_formal(setup, NumClass{{8}, 0}); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("eval") {
  NumClass a{{1}, 0}, b{{0}, 1};
  EvalModel m({{a, point_over_gm()}, {b, point_over_gm()}}, {{a, b, BigInt(3)}, {b, a, BigInt(3)}},
              Combinator::Product);
  auto da = FreeHallElement::letter(Alphabet::Delta, a);
  auto db = FreeHallElement::letter(Alphabet::Delta, b);
  RationalFn single = stacks::upsilon_stack(point_over_gm());
  CHECK(eval(da, m) == single);
  CHECK(eval(da * db, m) == RationalFn(T(6)) * single * single);
  CHECK(eval(da * db - db * da, m).is_zero());
  CHECK(error_kind_of([&] { (void)eval(FreeHallElement::letter(Alphabet::Delta, NumClass{{2}, 0}), m); }) ==
        ErrorKind::MissingAtom);
}

TEST_CASE("Clebsch-Gordan combinator merges censuses") {
  // Two P^1 atoms over their own bases: each value is s, a string of length 2.
  NumClass a{{1}, 0};
  auto p1 = stacks::StackClass::of(motives::smooth_from_betti({BigInt(1), BigInt(0), BigInt(1)}));
  EvalModel m({{a, p1}}, {});
  auto da = FreeHallElement::letter(Alphabet::Delta, a);
  // Strings of length 2 and 2 give lengths 3 and 1: s^2 + t^2 after the shift by t^{1+1}.
  CHECK(eval(da * da, m) == RationalFn(S(2) + T(2)));
}

TEST_CASE("ext-defect tables must be symmetric") {
  NumClass a{{1}, 0}, b{{2}, 0};
  CHECK(error_kind_of([&] { EvalModel({}, {{a, b, BigInt(1)}, {b, a, BigInt(2)}}); }) ==
        ErrorKind::AsymmetricExtDefect);
  CHECK(error_kind_of([&] { EvalModel({}, {{a, b, BigInt(1)}}); }) == ErrorKind::AsymmetricExtDefect);
  EvalModel ok({}, {{a, b, BigInt(1)}, {b, a, BigInt(1)}});
  CHECK(ok.ext_defect(b, a) == 1);
  CHECK(ok.ext_defect(a, a) == 0);
}

TEST_CASE("P(v)") {
  auto setup = unit_cone(1, {BigRational(1)});
  const long b2 = 3, b3 = 4;
  auto x = motives::point_base_from_betti({BigInt(1), BigInt(0), BigInt(b2), BigInt(b3), BigInt(b2), BigInt(0), BigInt(1)});
  NumClass d0{{0}, 1};
  EvalModel cy({{d0, stacks::quotient_by_special_group(x, AbsMotive::gm())}}, {});
  CHECK(p_of_v(setup, d0, cy) == RationalFn(C(1) + C(b2) * T(2) + C(b3) * T(3) + C(b2) * T(4) + T(6)));

  NumClass c{{1}, 1};
  EvalModel conifold({{c, point_over_gm()}}, {});
  CHECK(p_of_v(setup, c, conifold) == RationalFn(1));
  CHECK(p_of_v(setup, -c, conifold) == RationalFn(1));
  // Effective beta with any k needs its own atom.
  CHECK(error_kind_of([&] { (void)p_of_v(setup, NumClass{{1}, -1}, conifold); }) == ErrorKind::MissingAtom);
  // Neither v nor -v is effective.
  CHECK(p_of_v(setup, NumClass{{0}, 0}, conifold).is_zero());
  CHECK(error_kind_of([&] { (void)p_of_v(setup, NumClass{{2}, 1}, conifold); }) == ErrorKind::MissingAtom);
}

TEST_CASE("n_g from P") {
  CHECK(ng_from_p(RationalFn(1), 0) == 1);
  for (int g = 1; g <= 3; ++g) CHECK(ng_from_p(RationalFn(1), g) == 0);
  // flat(s^2) = t^-2 s^2: one string of length 3 starting at -2.
  CHECK(ng_from_p(RationalFn(S(2)), 0) == lefschetz::alt_ng(lefschetz::JordanCensus{{{-2, 3}, BigInt(1)}}, 0));
  CHECK(ng_from_p(RationalFn(S(2)), 0) == 3);
  for (int g = 0; g <= 3; ++g) CHECK(ng_from_p(RationalFn(0), g) == 0);
  CHECK(error_kind_of([] { (void)ng_from_p(RationalFn(C(1)) / RationalFn(T(2) - C(1)), 0); }) ==
        ErrorKind::NotPolynomial);
  CHECK(error_kind_of([] { (void)ng_from_p(RationalFn(T(1)), 0); }) == ErrorKind::OddMDegree);
}
