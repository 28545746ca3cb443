// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/counting/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

#include "gvmot/error.hpp"

namespace gvmot::counting {

bool NumClass::beta_is_zero() const {
  return std::all_of(beta.begin(), beta.end(), [](std::int64_t x) { return x == 0; });
}

NumClass NumClass::operator-() const {
  NumClass r = *this;
  for (auto& x : r.beta) x = -x;
  r.k = -r.k;
  return r;
}

NumClass operator+(const NumClass& a, const NumClass& b) {
  if (a.beta.size() != b.beta.size()) fail(ErrorKind::InvalidArgument, "classes of different rank");
  NumClass r = a;
  for (std::size_t i = 0; i < r.beta.size(); ++i) r.beta[i] += b.beta[i];
  r.k += b.k;
  return r;
}

NumClass operator-(const NumClass& a, const NumClass& b) { return a + (-b); }

std::string to_key(const CurveClass& beta) {
  std::string out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(beta[i]);
  }
  return out;
}

std::string to_key(const NumClass& v) { return to_key(v.beta) + ";" + std::to_string(v.k); }

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t x = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last || first == last) {
    fail(ErrorKind::Schema, "malformed class key '" + std::string(whole) + "'");
  }
  return x;
}

}  // namespace

NumClass parse_class_key(std::string_view key, std::optional<std::size_t> rank) {
  auto semi = key.find(';');
  if (semi == std::string_view::npos) fail(ErrorKind::Schema, "class key '" + std::string(key) + "' lacks ';'");
  NumClass v;
  std::string_view beta = key.substr(0, semi);
  while (!beta.empty()) {
    auto comma = beta.find(',');
    v.beta.push_back(parse_int(beta.substr(0, comma), key));
    if (comma == std::string_view::npos) break;
    beta.remove_prefix(comma + 1);
    if (beta.empty()) fail(ErrorKind::Schema, "malformed class key '" + std::string(key) + "'");
  }
  v.k = parse_int(key.substr(semi + 1), key);
  if (rank && v.beta.size() != *rank) {
    fail(ErrorKind::Schema, "class key '" + std::string(key) + "' has rank " + std::to_string(v.beta.size()) +
                                ", expected " + std::to_string(*rank));
  }
  return v;
}

ClassLattice::ClassLattice(std::size_t rank, std::vector<CurveClass> generators)
    : rank_(rank), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != rank_) fail(ErrorKind::InvalidArgument, "generator " + to_key(g) + " has the wrong rank");
    if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) {
      fail(ErrorKind::InvalidArgument, "zero cone generator");
    }
  }
}

BigRational CentralCharge::degree(const CurveClass& beta) const {
  BigRational d = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) d += omega[i] * BigRational(static_cast<long>(beta[i]));
  return d;
}

BigRational CentralCharge::re(const NumClass& v) const {
  BigRational r = BigRational(static_cast<long>(-v.k));
  for (std::size_t i = 0; i < v.beta.size(); ++i) r += b_field[i] * BigRational(static_cast<long>(v.beta[i]));
  return r;
}

BigRational CentralCharge::im(const NumClass& v) const { return degree(v.beta); }

Phase::Phase(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {
  if (sgn(re_) == 0 && sgn(im_) == 0) fail(ErrorKind::ZeroCharge, "central charge vanishes");
}

bool Phase::in_upper_half() const { return sgn(im_) > 0 || (sgn(im_) == 0 && sgn(re_) < 0); }

std::optional<BigRational> Phase::exact_value() const {
  if (sgn(im_) == 0) return sgn(re_) < 0 ? BigRational(1) : BigRational(2);
  if (sgn(re_) == 0) return sgn(im_) > 0 ? BigRational(1, 2) : BigRational(3, 2);
  return std::nullopt;
}

std::string Phase::to_string() const {
  if (auto v = exact_value()) return v->get_str();
  return "arg(" + re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + BigRational(abs(im_)).get_str() + "i)/pi";
}

bool operator==(const Phase& a, const Phase& b) {
  return a.re_ * b.im_ - a.im_ * b.re_ == 0 && sgn(a.re_ * b.re_ + a.im_ * b.im_) > 0;
}

bool operator<(const Phase& a, const Phase& b) {
  bool ua = a.in_upper_half();
  bool ub = b.in_upper_half();
  if (ua != ub) return ua;
  // Within a half-plane b is further counter-clockwise iff the cross product is positive.
  return sgn(a.re_ * b.im_ - a.im_ * b.re_) > 0;
}

Phase phase(const CentralCharge& z, const NumClass& v) { return Phase(z.re(v), z.im(v)); }

CountingSetup::CountingSetup(ClassLattice lattice, CentralCharge charge, std::size_t max_compositions)
    : lattice_(std::move(lattice)), charge_(std::move(charge)), max_compositions_(max_compositions) {
  const auto rank = lattice_.rank();
  if (charge_.b_field.size() != rank || charge_.omega.size() != rank) {
    fail(ErrorKind::InvalidArgument, "central charge does not match the lattice rank");
  }
  for (const auto& g : lattice_.generators()) {
    if (sgn(charge_.degree(g)) <= 0) {
      fail(ErrorKind::ConeNotPointed, "omega is not positive on generator " + to_key(g));
    }
  }
}

std::set<CurveClass> CountingSetup::monoid_elements_up_to(const CurveClass& beta) const {
  const BigRational bound = charge_.degree(beta);
  std::set<CurveClass> seen{CurveClass(lattice_.rank(), 0)};
  std::deque<CurveClass> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    CurveClass cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : lattice_.generators()) {
      CurveClass next = cur;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += g[i];
      if (charge_.degree(next) > bound) continue;
      if (seen.insert(next).second) {
        if (seen.size() > max_compositions_) fail(ErrorKind::ResourceLimit, "monoid enumeration exceeds the cap");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

bool CountingSetup::in_monoid(const CurveClass& beta) const {
  if (beta.size() != lattice_.rank()) fail(ErrorKind::InvalidArgument, "class of the wrong rank");
  if (std::all_of(beta.begin(), beta.end(), [](std::int64_t x) { return x == 0; })) return true;
  if (sgn(charge_.degree(beta)) <= 0) return false;
  return monoid_elements_up_to(beta).contains(beta);
}

bool CountingSetup::is_effective(const NumClass& v) const {
  if (v.beta_is_zero()) return v.k >= 1;
  return in_monoid(v.beta);
}

std::vector<NumClass> CountingSetup::same_phase_pieces(const NumClass& v) const {
  if (!is_effective(v)) fail(ErrorKind::NotEffective, "class " + to_key(v) + " is not effective");
  std::vector<NumClass> out;
  if (v.beta_is_zero()) {
    for (std::int64_t k = 1; k <= v.k; ++k) out.push_back(NumClass{v.beta, k});
    return out;
  }
  const auto elements = monoid_elements_up_to(v.beta);
  const BigRational total_degree = charge_.degree(v.beta);
  const BigRational b_part_v = charge_.re(NumClass{v.beta, 0});
  const BigRational excess = BigRational(static_cast<long>(v.k)) - b_part_v;
  for (const auto& piece : elements) {
    if (std::all_of(piece.begin(), piece.end(), [](std::int64_t x) { return x == 0; })) continue;
    CurveClass rest = v.beta;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= piece[i];
    bool rest_zero = std::all_of(rest.begin(), rest.end(), [](std::int64_t x) { return x == 0; });
    if (!rest_zero && !elements.contains(rest)) continue;
    // Z(u) = lambda Z(v) with lambda = omega.u / omega.v fixes k(u).
    BigRational k_piece = charge_.re(NumClass{piece, 0}) + charge_.degree(piece) / total_degree * excess;
    if (!is_integer(k_piece)) continue;
    NumClass u{piece, k_piece.get_num().get_si()};
    if (rest_zero && u != v) continue;
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace gvmot::counting
