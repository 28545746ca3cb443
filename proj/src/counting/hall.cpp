// Copyright 2026 The gvmot Authors
// SPDX-License-Identifier: Apache-2.0

#include "gvmot/counting/hall.hpp"

#include "gvmot/error.hpp"

namespace gvmot::counting {

FreeHallElement FreeHallElement::letter(Alphabet alphabet, const NumClass& v) {
  FreeHallElement f(alphabet);
  f.add(Word{v}, BigRational(1));
  return f;
}

BigRational FreeHallElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void FreeHallElement::add(const Word& w, const BigRational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void FreeHallElement::check_same_alphabet(const FreeHallElement& o) const {
  if (alphabet_ != o.alphabet_ && !is_zero() && !o.is_zero()) {
    fail(ErrorKind::InvalidArgument, "combining elements over different alphabets");
  }
}

FreeHallElement& FreeHallElement::operator+=(const FreeHallElement& o) {
  check_same_alphabet(o);
  if (is_zero()) alphabet_ = o.alphabet_;
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeHallElement& FreeHallElement::operator-=(const FreeHallElement& o) {
  check_same_alphabet(o);
  if (is_zero()) alphabet_ = o.alphabet_;
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreeHallElement& FreeHallElement::operator*=(const BigRational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

FreeHallElement operator*(const FreeHallElement& a, const FreeHallElement& b) {
  a.check_same_alphabet(b);
  FreeHallElement out(a.is_zero() ? b.alphabet_ : a.alphabet_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

NumClass word_class(const Word& w) {
  if (w.empty()) fail(ErrorKind::InvalidArgument, "class of the empty word");
  NumClass total = w.front();
  for (std::size_t i = 1; i < w.size(); ++i) total = total + w[i];
  return total;
}

std::string to_string(const FreeHallElement& f) {
  if (f.is_zero()) return "0";
  const char letter = f.alphabet() == Alphabet::Delta ? 'd' : 'e';
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    BigRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += mag.get_str() + "*";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += '*';
      out += letter;
      out += "(" + to_key(w[i]) + ")";
    }
  }
  return out;
}

namespace {

class CompositionEnumerator {
 public:
  explicit CompositionEnumerator(const CountingSetup& setup) : setup_(setup) {}

  const std::vector<Word>& of(const NumClass& v) {
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    std::vector<Word> out;
    for (const auto& piece : setup_.same_phase_pieces(v)) {
      if (piece == v) {
        out.push_back(Word{v});
      } else {
        for (const auto& tail : of(v - piece)) {
          Word w{piece};
          w.insert(w.end(), tail.begin(), tail.end());
          out.push_back(std::move(w));
          if (++produced_ > setup_.max_compositions()) {
            fail(ErrorKind::ResourceLimit, "more than " + std::to_string(setup_.max_compositions()) +
                                               " compositions of " + to_key(v));
          }
        }
      }
    }
    return memo_.emplace(v, std::move(out)).first->second;
  }

 private:
  const CountingSetup& setup_;
  std::map<NumClass, std::vector<Word>> memo_;
  std::size_t produced_ = 0;
};

}  // namespace

std::vector<Word> same_phase_compositions(const CountingSetup& setup, const NumClass& v) {
  CompositionEnumerator enumerator(setup);
  return enumerator.of(v);
}

FreeHallElement epsilon_formal(const CountingSetup& setup, const NumClass& v) {
  FreeHallElement out(Alphabet::Delta);
  for (const auto& w : same_phase_compositions(setup, v)) {
    const auto n = static_cast<long>(w.size());
    out.add(w, BigRational(n % 2 == 1 ? 1 : -1, n));
  }
  return out;
}

FreeHallElement delta_from_epsilon(const CountingSetup& setup, const NumClass& v) {
  FreeHallElement out(Alphabet::Epsilon);
  for (const auto& w : same_phase_compositions(setup, v)) {
    out.add(w, BigRational(BigInt(1), factorial(w.size())));
  }
  return out;
}

FreeHallElement substitute(const FreeHallElement& f, const std::function<FreeHallElement(const NumClass&)>& table) {
  std::map<NumClass, FreeHallElement> cache;
  auto image = [&](const NumClass& v) -> const FreeHallElement& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, table(v)).first;
    return it->second;
  };
  FreeHallElement out;
  for (const auto& [w, c] : f.terms()) {
    FreeHallElement product = image(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) product = product * image(w[i]);
    out += product * c;
  }
  return out;
}

}  // namespace gvmot::counting
