#include "oracles.hpp"

#include "weyl_lanke/tensor_algebra.hpp"

#include <doctest.h>

#include <random>

using namespace wl;

namespace {

DividedMonomial dm(const char* s) { return DividedMonomial::parse(s); }
ExteriorMonomial em(std::vector<int> v) { return ExteriorMonomial(std::move(v)); }

// v^{(a)} = v^a / a!; the product coefficient read off in the polynomial model.
Rational model_product_coefficient(const DividedMonomial& a, const DividedMonomial& b) {
  Rational poly = 1;  // coefficient of the ordinary monomial v^{a+b}
  Rational back = 1;  // v^{a+b} expressed through v^{(a+b)}
  const int letters = std::max(a.exps.size(), b.exps.size());
  for (int l = 1; l <= letters; ++l) {
    poly /= oracle::factorial(a.exponent(l)) * oracle::factorial(b.exponent(l));
    back *= oracle::factorial(a.exponent(l) + b.exponent(l));
  }
  return poly * back;
}

// Number of nonnegative matrices with the given row and column sums.
long count_tables(std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
  const int r = rows.back();
  rows.pop_back();
  long total = 0;
  std::vector<int> take(cols.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int left) -> void {
    if (j == cols.size()) {
      if (left != 0) return;
      std::vector<int> rest(cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) rest[k] = cols[k] - take[k];
      total += count_tables(rows, rest);
      return;
    }
    for (int t = 0; t <= std::min(left, cols[j]); ++t) {
      take[j] = t;
      self(self, j + 1, left - t);
    }
  };
  rec(rec, 0, r);
  return total;
}

}  // namespace

TEST_CASE("divided power monomial text") {
  CHECK(dm("1^2 3").exps == std::vector<int>{2, 0, 1});
  CHECK(dm("1^2 3").to_string() == "1^2 3");
  CHECK(dm("()").degree() == 0);
  CHECK(DividedMonomial().to_string() == "()");
  CHECK(DividedTensor::parse("1 2^2 | 1 2^5 | 3").to_string() == "1 2^2 | 1 2^5 | 3");
  CHECK(DividedTensor::parse("1 2^2 ⊗ 3").profile() == std::vector<int>{3, 1});
  CHECK(ExteriorMonomial::parse("1 2 4").indices == std::vector<int>{1, 2, 4});
  CHECK(em({}).to_string() == "()");
  CHECK_THROWS_AS(em({2, 1}), std::invalid_argument);
}

TEST_CASE("divided power product") {
  using DC = LinearCombination<DividedMonomial>;
  CHECK(dp_product(dm("1"), dm("1^4")) == DC(dm("1^5"), 5));
  CHECK(dp_product(dm("1^3 3"), DividedMonomial()) == DC(dm("1^3 3")));
  CHECK(dp_product(dm("1^2 2"), dm("1 2")) == DC(dm("1^3 2^2"), 6));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  for (int t = 0; t < 200; ++t) {
    DividedMonomial a(std::vector<int>{e(rng), e(rng), e(rng), e(rng), e(rng), e(rng)});
    DividedMonomial b(std::vector<int>{e(rng), e(rng), e(rng), e(rng), e(rng), e(rng)});
    const auto p = dp_product(a, b);
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->second == model_product_coefficient(a, b));
    CHECK(p == dp_product(b, a));
    DividedMonomial c(std::vector<int>{e(rng), e(rng)});
    CHECK(dp_product(dp_product(DC(a), DC(b)), DC(c)) == dp_product(DC(a), dp_product(DC(b), DC(c))));
  }
}

TEST_CASE("divided power coproduct") {
  using DT = LinearCombination<DividedTensor>;
  DT want;
  want.add(DividedTensor::parse("1 2 | 2"), 1);
  want.add(DividedTensor::parse("2^2 | 1"), 1);
  CHECK(dp_comultiply(dm("1 2^2"), {2, 1}) == want);

  CHECK(dp_comultiply(dm("1^2 3"), {0, 3}) == DT(DividedTensor{{DividedMonomial(), dm("1^2 3")}}));
  CHECK(dp_comultiply(dm("1^2"), {1, 1}) == DT(DividedTensor::parse("1 | 1")));
  CHECK(dp_comultiply(dm("1 2^2"), {3, 0, 0}) == DT(DividedTensor{{dm("1 2^2"), DividedMonomial(), DividedMonomial()}}));

  // the (3,3) part of splitting 1 2^5
  DT six;
  six.add(DividedTensor::parse("1 2^2 | 2^3"), 1);
  six.add(DividedTensor::parse("2^3 | 1 2^2"), 1);
  CHECK(dp_comultiply(dm("1 2^5"), {3, 3}) == six);

  for (const auto& [m, degs] : std::vector<std::pair<const char*, std::vector<int>>>{
           {"1^2 2^2", {2, 2}}, {"1^2 2^2", {1, 2, 1}}, {"1 2^2 3^3", {3, 3}}, {"1^3 2 3^2", {2, 2, 2}}}) {
    const auto split = dp_comultiply(dm(m), degs);
    for (const auto& [t, c] : split) CHECK(c == 1);
    CHECK(static_cast<long>(split.size()) == count_tables(degs, dm(m).exps));
  }

  // (Δ ⊗ 1)Δ = (1 ⊗ Δ)Δ on 1^2 2^2
  DT left, right;
  for (const auto& [t, c] : dp_comultiply(dm("1^2 2^2"), {3, 1}))
    for (const auto& [u, d] : dp_comultiply(t.factors[0], {1, 2}))
      left.add(DividedTensor{{u.factors[0], u.factors[1], t.factors[1]}}, c * d);
  for (const auto& [t, c] : dp_comultiply(dm("1^2 2^2"), {1, 3}))
    for (const auto& [u, d] : dp_comultiply(t.factors[1], {2, 1}))
      right.add(DividedTensor{{t.factors[0], u.factors[0], u.factors[1]}}, c * d);
  CHECK(left == right);
  CHECK(left == dp_comultiply(dm("1^2 2^2"), {1, 2, 1}));
  CHECK_THROWS_AS(dp_comultiply(dm("1^2"), {1, 2}), std::invalid_argument);
}

TEST_CASE("exterior product and coproduct") {
  using EC = LinearCombination<ExteriorMonomial>;
  CHECK(ext_product(em({1, 2}), em({3})) == EC(em({1, 2, 3})));
  CHECK(ext_product(em({2}), em({1})) == EC(em({1, 2}), -1));
  CHECK(ext_product(em({1, 3}), em({1})).empty());
  for (const auto& a : {em({1}), em({2, 5}), em({1, 3, 4})}) CHECK(ext_product(a, a).empty());

  using ET = LinearCombination<ExteriorTensor>;
  ET two;
  two.add(ExteriorTensor::parse("1 | 2"), 1);
  two.add(ExteriorTensor::parse("2 | 1"), -1);
  CHECK(ext_comultiply(em({1, 2}), {1, 1}) == two);

  ET three;
  three.add(ExteriorTensor::parse("1 2 | 3"), 1);
  three.add(ExteriorTensor::parse("1 3 | 2"), -1);
  three.add(ExteriorTensor::parse("2 3 | 1"), 1);
  CHECK(ext_comultiply(em({1, 2, 3}), {2, 1}) == three);
  CHECK(ext_comultiply(em({1, 4}), {2, 0}) == ET(ExteriorTensor{{em({1, 4}), em({})}}));

  // shuffle signs from permutation parity
  const auto x = em({1, 2, 4, 5, 7});
  ET brute;
  std::vector<bool> pick{true, true, false, false, false};
  do {
    std::vector<int> first, second;
    for (std::size_t i = 0; i < pick.size(); ++i) (pick[i] ? first : second).push_back(x.indices[i]);
    std::vector<int> word = first;
    word.insert(word.end(), second.begin(), second.end());
    brute.add(ExteriorTensor{{em(first), em(second)}}, oracle::sort_sign(word));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  CHECK(ext_comultiply(x, {2, 3}) == brute);

  // product of the pieces recovers a multiple of x
  EC back;
  for (const auto& [t, c] : ext_comultiply(x, {2, 3})) back.add_scaled(ext_product(t.factors[0], t.factors[1]), c);
  CHECK(back == EC(x, 10));
}

TEST_CASE("basis enumerators") {
  const auto b = divided_basis({2, 1}, {1, 1, 1});
  CHECK(b.size() == 3);
  for (const auto& t : b) CHECK(weight_of(t) == std::vector<int>{1, 1, 1});
  CHECK(exterior_basis({2, 1, 1}, {1, 1, 1, 1}).size() == 12);
  for (const std::vector<int>& profile : {std::vector<int>{2, 1}, {3, 2, 2}}) {
    long total = 0;
    const int deg = profile[0] + (profile.size() > 1 ? profile[1] : 0) + (profile.size() > 2 ? profile[2] : 0);
    for (int a = 0; a <= deg; ++a)
      for (int bb = 0; a + bb <= deg; ++bb) {
        std::vector<int> w{a, bb, deg - a - bb};
        while (!w.empty() && w.back() == 0) w.pop_back();
        total += static_cast<long>(divided_basis(profile, w).size());
      }
    // multisets of size p from 3 letters, one per factor
    long want = 1;
    for (int p : profile) want *= (p + 2) * (p + 1) / 2;
    CHECK(total == want);
  }
  CHECK(divided_generator({3, 2}).to_string() == "1^3 | 2^2");
  const auto s = comb::Tableau::parse("1^2 3 / 2");
  CHECK(tensor_tableau(tableau_tensor(s)) == s);
}
