// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/algebra/laurent_poly.hpp"

#include <sstream>
#include <vector>

namespace gvmot {
namespace {

template <class Coeff>
std::string format_poly(const Poly<Coeff>& q) {
  if (q.is_zero()) return "0";
  std::vector<std::pair<Monomial, Coeff>> terms(q.terms().begin(), q.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    auto mx = x.first.t + 2 * x.first.s;
    auto my = y.first.t + 2 * y.first.s;
    if (mx != my) return mx > my;
    return x.first.s > y.first.s;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Coeff mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    bool unit = (mag == 1);
    if (!unit || (m.t == 0 && m.s == 0)) factors.push_back(mag.get_str());
    if (m.t == 1) {
      factors.emplace_back("t");
    } else if (m.t != 0) {
      factors.push_back("t^" + std::to_string(m.t));
    }
    if (m.s == 1) {
      factors.emplace_back("s");
    } else if (m.s != 0) {
      factors.push_back("s^" + std::to_string(m.s));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

}  // namespace

LaurentPoly flat(const LaurentPoly& q) {
  auto m = m_degree(q);
  if (m % 2 != 0) fail(ErrorKind::OddMDegree, "m-degree " + std::to_string(m) + " is odd");
  return q.shift_t(-m / 2);
}

LaurentPoly to_integer_poly(const QLaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [m, c] : q.terms()) {
    if (!is_integer(c)) fail(ErrorKind::NotPolynomial, "fractional coefficient " + c.get_str());
    r.add_term(m, BigInt(c.get_num()));
  }
  return r;
}

QLaurentPoly to_rational_poly(const LaurentPoly& q) {
  QLaurentPoly r;
  for (const auto& [m, c] : q.terms()) r.add_term(m, BigRational(c));
  return r;
}

std::string to_string(const LaurentPoly& q) { return format_poly(q); }
std::string to_string(const QLaurentPoly& q) { return format_poly(q); }

}  // namespace gvmot
