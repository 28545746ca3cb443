// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/motives/motive.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "gvmot/error.hpp"

namespace gvmot::motives {

using lefschetz::JordanCensus;

AbsMotive AbsMotive::from_poly(LaurentPoly value, std::string name) {
  if (!value.is_t_only()) fail(ErrorKind::InvalidArgument, "absolute class involves s");
  return AbsMotive{std::move(value), std::move(name)};
}

AbsMotive AbsMotive::point() { return {LaurentPoly(1), "pt"}; }
AbsMotive AbsMotive::lefschetz() { return {LaurentPoly::t(2), "L"}; }

AbsMotive AbsMotive::affine(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative affine dimension");
  return {LaurentPoly::t(2 * n), "A^" + std::to_string(n)};
}

AbsMotive AbsMotive::gm() { return {LaurentPoly::t(2) - LaurentPoly(1), "Gm"}; }

AbsMotive AbsMotive::gl(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "GL_n needs n >= 1");
  LaurentPoly v(1);
  for (int k = 0; k < n; ++k) v *= LaurentPoly::t(2 * n) - LaurentPoly::t(2 * k);
  return {v, "GL_" + std::to_string(n)};
}

int AbsMotive::dimension() const {
  auto m = m_degree(value);
  if (m % 2 != 0) fail(ErrorKind::OddMDegree, "absolute class of odd degree");
  return static_cast<int>(m / 2);
}

struct MotiveExpr::Node {
  Kind kind = Kind::Zero;
  std::optional<int> dim;
  std::string name;
  JordanCensus census;
  std::vector<MotiveExpr> children;
  BigInt scalar = 1;
  AbsMotive factor;
  int rank = 0;
  std::size_t size = 1;

  mutable std::once_flag evaluated;
  mutable LaurentPoly value;
};

namespace {

const MotiveExpr::Kind kZero = MotiveExpr::Kind::Zero;

std::optional<int> max_dim(const std::vector<MotiveExpr>& xs) {
  std::optional<int> d;
  for (const auto& x : xs) {
    if (x.dim()) d = d ? std::max(*d, *x.dim()) : *x.dim();
  }
  return d;
}

std::optional<int> shifted(std::optional<int> d, int by) {
  if (d) return *d + by;
  return std::nullopt;
}

LaurentPoly even_powers(int from, int to) {
  LaurentPoly p;
  for (int k = from; k <= to; ++k) p += LaurentPoly::t(2 * k);
  return p;
}

}  // namespace

MotiveExpr::MotiveExpr() : MotiveExpr(zero()) {}

MotiveExpr::MotiveExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

MotiveExpr MotiveExpr::zero() {
  static const auto kZeroNode = std::make_shared<const Node>();
  return MotiveExpr(kZeroNode);
}

MotiveExpr MotiveExpr::atom(std::string name, int dim, JordanCensus census) {
  if (dim < 0) fail(ErrorKind::DimMismatch, "atom '" + name + "' has negative dimension");
  for (const auto& [cell, nu] : census.entries()) {
    int top = cell.alpha + 2 * (cell.length - 1);
    if (cell.alpha < -dim || top > dim) {
      fail(ErrorKind::DimMismatch, "atom '" + name + "' has a cell outside degrees [-" + std::to_string(dim) + ", " +
                                       std::to_string(dim) + "]");
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->dim = dim;
  n->name = std::move(name);
  n->census = std::move(census);
  return MotiveExpr(std::move(n));
}

MotiveExpr MotiveExpr::sum(const MotiveExpr& a, const MotiveExpr& b) { return sum(std::vector<MotiveExpr>{a, b}); }

MotiveExpr MotiveExpr::sum(std::vector<MotiveExpr> terms) {
  std::erase_if(terms, [](const MotiveExpr& x) { return x.kind() == kZero; });
  if (terms.empty()) return zero();
  if (terms.size() == 1) return terms.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->dim = max_dim(terms);
  for (const auto& t : terms) n->size += t.size();
  n->children = std::move(terms);
  return MotiveExpr(std::move(n));
}

MotiveExpr MotiveExpr::diff(const MotiveExpr& a, const MotiveExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Diff;
  n->children = {a, b};
  n->dim = max_dim(n->children);
  n->size += a.size() + b.size();
  return MotiveExpr(std::move(n));
}

MotiveExpr MotiveExpr::scale(const BigInt& k, const MotiveExpr& e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::IntScale;
  n->scalar = k;
  n->children = {e};
  n->dim = e.dim();
  n->size += e.size();
  return MotiveExpr(std::move(n));
}

MotiveExpr MotiveExpr::product(const AbsMotive& factor, const MotiveExpr& e) {
  if (!factor.value.is_t_only()) fail(ErrorKind::InvalidArgument, "absolute class involves s");
  auto n = std::make_shared<Node>();
  n->kind = Kind::AbsProduct;
  n->factor = factor;
  n->children = {e};
  n->dim = factor.value.is_zero() ? std::nullopt : shifted(e.dim(), factor.dimension());
  n->size += e.size();
  return MotiveExpr(std::move(n));
}

MotiveExpr MotiveExpr::proj_bundle(const MotiveExpr& base, int r) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "projective bundle needs r >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::ProjBundle;
  n->rank = r;
  n->children = {base};
  n->dim = shifted(base.dim(), r - 1);
  n->size += base.size();
  return MotiveExpr(std::move(n));
}

MotiveExpr MotiveExpr::blowup(const MotiveExpr& ambient, const MotiveExpr& center, int r) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "blow-up needs codimension r >= 1");
  if (ambient.dim() && center.dim() && *ambient.dim() != *center.dim() + r) {
    fail(ErrorKind::DimMismatch, "blow-up centre of dimension " + std::to_string(*center.dim()) +
                                     " has codimension " + std::to_string(*ambient.dim() - *center.dim()) +
                                     ", expected " + std::to_string(r));
  }
  if (!ambient.dim() && center.dim()) fail(ErrorKind::DimMismatch, "blow-up of the empty variety along a nonempty centre");
  auto n = std::make_shared<Node>();
  n->kind = Kind::BlowUpRel;
  n->rank = r;
  n->children = {ambient, center};
  n->dim = ambient.dim();
  n->size += ambient.size() + center.size();
  return MotiveExpr(std::move(n));
}

MotiveExpr MotiveExpr::fibration(const MotiveExpr& base, const AbsMotive& fibre) {
  if (!fibre.value.is_t_only()) fail(ErrorKind::InvalidArgument, "absolute class involves s");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Fibration;
  n->factor = fibre;
  n->children = {base};
  n->dim = fibre.value.is_zero() ? std::nullopt : shifted(base.dim(), fibre.dimension());
  n->size += base.size();
  return MotiveExpr(std::move(n));
}

MotiveExpr MotiveExpr::finite_push(const MotiveExpr& e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FinitePush;
  n->children = {e};
  n->dim = e.dim();
  n->size += e.size();
  return MotiveExpr(std::move(n));
}

MotiveExpr::Kind MotiveExpr::kind() const { return node_->kind; }
std::optional<int> MotiveExpr::dim() const { return node_->dim; }
const std::string& MotiveExpr::name() const { return node_->name; }
const JordanCensus& MotiveExpr::census() const { return node_->census; }
const std::vector<MotiveExpr>& MotiveExpr::children() const { return node_->children; }
const BigInt& MotiveExpr::scalar() const { return node_->scalar; }
const AbsMotive& MotiveExpr::factor() const { return node_->factor; }
int MotiveExpr::rank() const { return node_->rank; }
std::size_t MotiveExpr::size() const { return node_->size; }

namespace {

LaurentPoly evaluate(const MotiveExpr& e) {
  using Kind = MotiveExpr::Kind;
  const auto& ch = e.children();
  switch (e.kind()) {
    case Kind::Zero:
      return {};
    case Kind::Atom:
      return lefschetz::census_polynomial(e.census()).shift_t(*e.dim());
    case Kind::Sum: {
      LaurentPoly p;
      for (const auto& c : ch) p += upsilon_rel(c);
      return p;
    }
    case Kind::Diff:
      return upsilon_rel(ch[0]) - upsilon_rel(ch[1]);
    case Kind::IntScale:
      return upsilon_rel(ch[0]) * e.scalar();
    case Kind::AbsProduct:
    case Kind::Fibration:
      return e.factor().value * upsilon_rel(ch[0]);
    case Kind::ProjBundle:
      return upsilon_rel(ch[0]) * even_powers(0, e.rank() - 1);
    case Kind::BlowUpRel:
      return upsilon_rel(ch[0]) + upsilon_rel(ch[1]) * even_powers(1, e.rank() - 1);
    case Kind::FinitePush:
      return upsilon_rel(ch[0]);
  }
  return {};
}

}  // namespace

LaurentPoly upsilon_rel(const MotiveExpr& e) {
  // Children are shared between trees, so the value is cached on the node.
  const MotiveExpr::Node& n = *e.node_;
  std::call_once(n.evaluated, [&] { n.value = evaluate(e); });
  return n.value;
}

namespace {

std::size_t checked_half_length(const std::vector<BigInt>& bettis) {
  if (bettis.empty() || bettis.size() % 2 == 0) {
    fail(ErrorKind::InvalidArgument, "expected 2d + 1 Betti numbers, got " + std::to_string(bettis.size()));
  }
  for (const auto& b : bettis) {
    if (sgn(b) < 0) fail(ErrorKind::InvalidArgument, "negative Betti number");
  }
  const std::size_t n = bettis.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    if (bettis[i] != bettis[n - i]) {
      fail(ErrorKind::NotDualitySymmetric, "b_" + std::to_string(i) + " != b_" + std::to_string(n - i));
    }
  }
  return n / 2;
}

}  // namespace

MotiveExpr smooth_from_betti(const std::vector<BigInt>& bettis, std::string name) {
  const std::size_t d = checked_half_length(bettis);
  auto b = [&](std::int64_t i) { return i < 0 ? BigInt(0) : bettis[static_cast<std::size_t>(i)]; };
  for (std::int64_t i = 2; i <= static_cast<std::int64_t>(d); ++i) {
    if (b(i) < b(i - 2)) fail(ErrorKind::NotHardLefschetz, "b_" + std::to_string(i) + " < b_" + std::to_string(i - 2));
  }
  JordanCensus census;
  const auto di = static_cast<int>(d);
  for (int alpha = -di; alpha <= 0; ++alpha) census.add(alpha, 1 - alpha, b(di + alpha) - b(di + alpha - 2));
  return MotiveExpr::atom(std::move(name), di, std::move(census));
}

MotiveExpr point_base_from_betti(const std::vector<BigInt>& bettis, std::string name) {
  const auto d = static_cast<int>(checked_half_length(bettis));
  JordanCensus census;
  for (int i = 0; i <= 2 * d; ++i) census.add(i - d, 1, bettis[static_cast<std::size_t>(i)]);
  return MotiveExpr::atom(std::move(name), d, std::move(census));
}

LaurentPoly projective_bundle_value(const MotiveExpr& base, int r) {
  return upsilon_rel(MotiveExpr::proj_bundle(base, r));
}

bool blowup_relation_check(const MotiveExpr& ambient, const MotiveExpr& center, int r) {
  if (r < 2) fail(ErrorKind::InvalidArgument, "blow-up relation needs codimension r >= 2");
  if (center.kind() == MotiveExpr::Kind::Zero) return true;
  auto blown_up = MotiveExpr::blowup(ambient, center, r);
  auto exceptional = MotiveExpr::proj_bundle(center, r);
  return upsilon_rel(blown_up) - upsilon_rel(exceptional) == upsilon_rel(ambient) - upsilon_rel(center);
}

bool is_geometric(const MotiveExpr& e) {
  using Kind = MotiveExpr::Kind;
  const auto& ch = e.children();
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::Diff:
      return false;
    case Kind::Atom: {
      if (e.census().is_zero() || !e.census().is_nonnegative()) return false;
      int top = -*e.dim() - 1;
      for (const auto& [cell, nu] : e.census().entries()) top = std::max(top, cell.alpha + 2 * (cell.length - 1));
      return top == *e.dim();
    }
    case Kind::Sum:
      return std::all_of(ch.begin(), ch.end(), is_geometric);
    case Kind::IntScale:
      return sgn(e.scalar()) > 0 && is_geometric(ch[0]);
    case Kind::AbsProduct:
    case Kind::Fibration: {
      const auto& f = e.factor().value;
      return !f.is_zero() && sgn(f.terms().rbegin()->second) > 0 && is_geometric(ch[0]);
    }
    case Kind::ProjBundle:
    case Kind::FinitePush:
      return is_geometric(ch[0]);
    case Kind::BlowUpRel:
      return is_geometric(ch[0]) && (ch[1].kind() == Kind::Zero || is_geometric(ch[1]));
  }
  return false;
}

}  // namespace gvmot::motives
