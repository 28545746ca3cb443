// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/gwseries/transform.hpp"

#include <algorithm>
#include <set>

#include "gvmot/error.hpp"

namespace gvmot::gw {

BigInt GVTable::at(int genus, const CurveClass& beta) const {
  auto it = entries.find(Key{genus, beta});
  return it == entries.end() ? BigInt(0) : it->second;
}

void GVTable::add(int genus, const CurveClass& beta, const BigInt& n) {
  if (sgn(n) == 0) return;
  auto [it, inserted] = entries.try_emplace(Key{genus, beta}, n);
  if (!inserted) {
    it->second += n;
    if (sgn(it->second) == 0) entries.erase(it);
  }
}

BigRational GWSeries::at(const CurveClass& beta, int lambda_exp) const {
  auto it = coeffs.find(Key{beta, lambda_exp});
  return it == coeffs.end() ? BigRational(0) : it->second;
}

void GWSeries::add(const CurveClass& beta, int lambda_exp, const BigRational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = coeffs.try_emplace(Key{beta, lambda_exp}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coeffs.erase(it);
  }
}

namespace {

using Series = std::vector<BigRational>;

Series multiply(const Series& a, const Series& b, std::size_t n) {
  Series out(n, BigRational(0));
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// 1/a for a power series with a[0] != 0.
Series invert(const Series& a, std::size_t n) {
  Series out(n, BigRational(0));
  out[0] = 1 / a[0];
  for (std::size_t m = 1; m < n; ++m) {
    BigRational acc = 0;
    for (std::size_t j = 1; j <= m && j < a.size(); ++j) acc += a[j] * out[m - j];
    out[m] = -acc / a[0];
  }
  return out;
}

BigRational degree(const std::vector<BigRational>& omega, const CurveClass& beta) {
  if (omega.size() != beta.size()) fail(ErrorKind::InvalidArgument, "class rank does not match the degree functional");
  BigRational d = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) d += omega[i] * BigRational(static_cast<long>(beta[i]));
  return d;
}

CurveClass times(const CurveClass& beta, std::int64_t k) {
  CurveClass out = beta;
  for (auto& x : out) x *= k;
  return out;
}

/// Coefficient tables for several genera, filled on first use.
class SinPowers {
 public:
  explicit SinPowers(int order) : order_(order) {}
  const Series& of(int g) {
    auto it = cache_.find(g);
    if (it == cache_.end()) {
      auto coeffs = two_sin_power_coefficients(g, order_);
      it = cache_.emplace(g, Series(coeffs.begin(), coeffs.end())).first;
    }
    return it->second;
  }

 private:
  int order_;
  std::map<int, Series> cache_;
};

}  // namespace

std::vector<BigRational> two_sin_power_coefficients(int g, int order) {
  if (g < 0 || order < 0) fail(ErrorKind::InvalidArgument, "negative genus or order");
  const auto n = static_cast<std::size_t>(order) + 1;
  // 2 sin(x/2) = x S(x^2), S(u) = sum_m (-1)^m u^m / (4^m (2m+1)!).
  Series s(n);
  for (std::size_t m = 0; m < n; ++m) {
    BigInt den = factorial(2 * m + 1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * m);
    s[m] = BigRational(BigInt(m % 2 == 0 ? 1 : -1), den);
    s[m].canonicalize();
  }
  Series base = g == 0 ? invert(s, n) : s;
  const int power = g == 0 ? 2 : 2 * g - 2;
  Series out(n, BigRational(0));
  out[0] = 1;
  for (int i = 0; i < power; ++i) out = multiply(out, base, n);
  return out;
}

GWSeries gv_to_gw(const GVTable& table, const BigRational& degree_cut, int lambda_cut) {
  GWSeries out;
  out.omega = table.omega;
  out.degree_cut = degree_cut;
  out.lambda_cut = lambda_cut;
  if (lambda_cut < -2) return out;
  SinPowers powers(lambda_cut / 2 + 1);
  for (const auto& [key, n] : table.entries) {
    const BigRational d = degree(table.omega, key.beta);
    if (sgn(d) <= 0) fail(ErrorKind::ConeNotPointed, "class " + counting::to_key(key.beta) + " has degree <= 0");
    const int lowest = 2 * key.genus - 2;
    if (lowest > lambda_cut) continue;
    const Series& c = powers.of(key.genus);
    for (std::int64_t k = 1; d * k <= degree_cut; ++k) {
      const CurveClass multiple = times(key.beta, k);
      for (int e = lowest, m = 0; e <= lambda_cut; e += 2, ++m) {
        // n/k * c_m k^e lambda^e
        BigRational term = c[static_cast<std::size_t>(m)] * BigRational(n) * power(BigRational(k), static_cast<std::int64_t>(e - 1));
        out.add(multiple, e, term);
      }
    }
  }
  return out;
}

GVSolve gw_to_gv(const GWSeries& series, int genus_max, bool strict) {
  if (genus_max < 0) fail(ErrorKind::InvalidArgument, "negative genus");
  if (2 * genus_max - 2 > series.lambda_cut) {
    fail(ErrorKind::InsufficientTruncation, "genus " + std::to_string(genus_max) + " needs lambda order " +
                                                std::to_string(2 * genus_max - 2) + " but the series stops at " +
                                                std::to_string(series.lambda_cut));
  }
  GVSolve result;
  result.table.omega = series.omega;
  result.table.genus_max = genus_max;
  result.table.degree_cut = series.degree_cut;

  SinPowers powers(genus_max);
  auto order_key = [&](const CurveClass& beta) { return std::make_pair(degree(series.omega, beta), beta); };
  std::set<std::pair<BigRational, CurveClass>> pending;
  for (const auto& [key, c] : series.coeffs) {
    const BigRational d = degree(series.omega, key.beta);
    if (sgn(d) <= 0) fail(ErrorKind::ConeNotPointed, "class " + counting::to_key(key.beta) + " has degree <= 0");
    if (d <= series.degree_cut) pending.insert(order_key(key.beta));
  }

  // Solved values by class, including fractional ones, for later subtraction.
  std::map<CurveClass, std::map<int, BigRational>> solved;
  while (!pending.empty()) {
    auto [d, beta] = *pending.begin();
    pending.erase(pending.begin());
    bool any_nonzero = false;
    for (int g = 0; g <= genus_max; ++g) {
      const int e = 2 * g - 2;
      BigRational value = series.at(beta, e);
      // Contributions of beta' with beta = k beta' at genus g' <= g.
      std::int64_t kmax = 0;
      for (auto x : beta) kmax = std::max<std::int64_t>(kmax, x < 0 ? -x : x);
      for (std::int64_t k = 1; k <= std::max<std::int64_t>(kmax, 1); ++k) {
        if (std::any_of(beta.begin(), beta.end(), [k](std::int64_t x) { return x % k != 0; })) continue;
        CurveClass root = beta;
        for (auto& x : root) x /= k;
        auto it = solved.find(root);
        if (it == solved.end()) continue;
        for (const auto& [gp, n] : it->second) {
          if (gp > g || (k == 1 && gp == g)) continue;
          const Series& c = powers.of(gp);
          value -= n * c[static_cast<std::size_t>(g - gp)] * power(BigRational(k), static_cast<std::int64_t>(e - 1));
        }
      }
      if (sgn(value) == 0) continue;
      solved[beta][g] = value;
      any_nonzero = true;
      if (is_integer(value)) {
        result.table.add(g, beta, value.get_num());
      } else {
        if (strict) {
          fail(ErrorKind::NonIntegral, "n_" + std::to_string(g) + " of " + counting::to_key(beta) + " is " + value.get_str());
        }
        result.non_integral.push_back({g, beta, value});
      }
    }
    if (any_nonzero) {
      for (std::int64_t k = 2; d * k <= series.degree_cut; ++k) pending.insert(order_key(times(beta, k)));
    }
  }
  return result;
}

}  // namespace gvmot::gw
