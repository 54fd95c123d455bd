#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace wl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Finite formal sum over a totally ordered basis with exact rational
/// coefficients. Zero coefficients are never stored, and iteration follows
/// the basis order, so two equal combinations serialize identically.
template <typename Basis>
class LinearCombination {
 public:
  using Map = std::map<Basis, Rational>;
  using const_iterator = typename Map::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(const Basis& b, const Rational& c = 1) { add(b, c); }

  void add(const Basis& b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  /// Adds s * o without materializing the scaled copy.
  void add_scaled(const LinearCombination& o, const Rational& s) {
    if (s == 0) return;
    for (const auto& [b, c] : o.terms_) add(b, c * s);
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

  /// Extends a basis-level linear map f : Basis -> LinearCombination<Out>.
  template <typename Out, typename F>
  LinearCombination<Out> apply(F&& f) const {
    LinearCombination<Out> out;
    for (const auto& [b, c] : terms_) out.add_scaled(f(b), c);
    return out;
  }

 private:
  Map terms_;
};

/// Signed rational prefix used by every text serializer: "", "−", "+", "−3/2·", ...
std::string format_coefficient(const Rational& c, bool first);

/// Serializes a combination as "c·(b) ±c·(b) ..." with "0" for the empty sum.
template <typename Basis, typename Fmt>
std::string format_combination(const LinearCombination<Basis>& lc, Fmt&& fmt) {
  if (lc.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : lc) {
    if (!first) out += ' ';
    out += format_coefficient(c, first);
    out += '(';
    out += fmt(b);
    out += ')';
    first = false;
  }
  return out;
}

}  // namespace wl
