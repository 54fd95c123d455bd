#include "oracles.hpp"

#include "weyl_lanke/gamma_maps.hpp"
#include "weyl_lanke/weyl.hpp"

#include <doctest.h>

#include <random>

using namespace wl;
using comb::Partition;
using comb::Tableau;

namespace {

Tableau tab(const char* s) { return Tableau::parse(s); }

LinearCombination<Tableau> lc(std::initializer_list<std::pair<const char*, int>> terms) {
  LinearCombination<Tableau> out;
  for (const auto& [t, c] : terms) out.add(tab(t), c);
  return out;
}

Integer binom(int a, int b) {
  return oracle::factorial(a) / (oracle::factorial(b) * oracle::factorial(a - b));
}

}  // namespace

TEST_CASE("two-row raising") {
  CHECK(weyl::straighten_pair(Partition({3, 2}), tab("1 2 3 / 1 3"), 1) ==
        lc({{"1^2 3 / 2 3", -1}, {"1^2 2 / 3^2", -2}}));
  CHECK(weyl::straighten_pair(Partition({2, 1}), tab("1 2 / 1"), 1) == lc({{"1^2 / 2", -1}}));
  // three 1's cannot fit in a first row of length 2
  CHECK(weyl::straighten_pair(Partition({2, 2}), tab("1 2 / 1^2"), 1).empty());
  CHECK_THROWS_AS(weyl::straighten_pair(Partition({3, 2}), tab("1 2 3 / 2 3"), 1), std::invalid_argument);
}

TEST_CASE("straightening in the semistandard basis") {
  CHECK(weyl::straighten(Partition({3, 2}), tab("1 2 3 / 1 3")).to_string() == "−1·(1^2 3 / 2 3) −2·(1^2 2 / 3^2)");
  CHECK(weyl::straighten(Partition({2, 1}), tab("1 2 / 1")).to_string() == "−1·(1^2 / 2)");

  const auto s = tab("1^3 2 / 2 3 / 3");
  CHECK(weyl::straighten(s.shape(), s) == weyl::basis_vector(s));

  // raising every 1 into the first row
  const Partition mu({4, 3, 2});
  const auto raised = weyl::raise_letter(mu, LinearCombination<Tableau>(tab("1 2^2 3 / 1 2 3 / 1 3")), 1);
  CHECK(raised == lc({{"1^3 3 / 2^2 3 / 2 3", -1},
                      {"1^3 2 / 2 3^2 / 2 3", -2},
                      {"1^3 3 / 2^3 / 3^2", -6},
                      {"1^3 2 / 2^2 3 / 3^2", -4}}));

  // The raised form and the original straighten to the same vector. The
  // second-to-last term has first row 1^3 2, so its expansion cannot be
  // -2·(1^3 3 / 2^2 3 / 3^2); the realization settles the final coordinates.
  const auto direct = weyl::straighten(mu, tab("1 2^2 3 / 1 2 3 / 1 3"));
  CHECK(direct == weyl::oracle_coords(mu, tab("1 2^2 3 / 1 2 3 / 1 3")));
  CHECK(weyl::straighten(mu, raised) == direct);
  CHECK(weyl::straighten(mu, tab("1^3 2 / 2 3^2 / 2 3")) == weyl::oracle_coords(mu, tab("1^3 2 / 2 3^2 / 2 3")));
}

TEST_CASE("straighten agrees with the realization on random tableaux") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> letter(1, 4);
  weyl::StraightenStats stats;
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<int> len(1, 4);
    std::vector<int> rows{len(rng), len(rng), len(rng)};
    std::sort(rows.rbegin(), rows.rend());
    rows.back() = std::uniform_int_distribution<int>(0, rows.back())(rng);
    std::vector<comb::RowCounts> counts;
    for (int r : rows) {
      comb::RowCounts row(4, 0);
      for (int k = 0; k < r; ++k) ++row[letter(rng) - 1];
      counts.push_back(row);
    }
    const Tableau s(counts);
    const Partition mu = s.shape();
    const auto fast = weyl::straighten(mu, s, &stats);
    const auto slow = weyl::oracle_coords(mu, s);
    CHECK_MESSAGE(fast == slow, s.to_string());
    CHECK(fast.is_zero() == slow.is_zero());
  }
  CHECK(stats.moves > 0);
}

TEST_CASE("phi on the worked divided power example") {
  const auto s = tab("1^2 2^3 / 1 2^3 / 3");
  CHECK(s.shape() == Partition({5, 4, 1}));
  CHECK(s.weight() == std::vector<int>{3, 6, 1});
  LinearCombination<DividedTensor> want;
  want.add(DividedTensor::parse("1^2 2^3 | 2^4 | 3"), binom(2, 1) * binom(3, 1) * binom(4, 1));
  want.add(DividedTensor::parse("1 2^4 | 1 2^3 | 3"), binom(4, 1) * binom(3, 1) + binom(4, 2));
  want.add(DividedTensor::parse("2^5 | 1^2 2^2 | 3"), binom(5, 2) * binom(2, 1));
  CHECK(weyl::phi(s, DividedTensor::parse("1 2^2 | 1 2^5 | 3")) == want);

  // a diagonal tableau gives the identity
  const auto diag = tab("1^3 / 2^2 / 3");
  const auto x = DividedTensor::parse("1 2^2 | 1 3 | 2");
  CHECK(weyl::phi(diag, x) == LinearCombination<DividedTensor>(x));
  CHECK_THROWS(weyl::phi(s, DividedTensor::parse("1 | 2 | 3")));
}

TEST_CASE("psi and the projections pi_U") {
  // S(2) at n = 2
  const auto s2 = tab("1 2 / 1 / 3");
  LinearCombination<ExteriorTensor> want;
  want.add(ExteriorTensor::parse("1 3 | 2 | 4"), 1);
  want.add(ExteriorTensor::parse("2 3 | 1 | 4"), -1);
  CHECK(weyl::psi(s2, ExteriorTensor::parse("1 2 | 3 | 4")) == want);
  const auto diag = tab("1^2 / 2 / 3");
  CHECK(weyl::psi(diag, ExteriorTensor::parse("1 2 | 3 | 4")) == LinearCombination<ExteriorTensor>(ExteriorTensor::parse("1 2 | 3 | 4")));

  // R_0 at n = 3 against 12^{(2)} | 1^{(2)} | 3^{(2)}
  const auto r0 = tab("1^3 3 / 2^2 / 3");
  const auto pv = weyl::pi_U(r0, DividedTensor::parse("1 2^2 | 1^2 | 3^2"));
  CHECK(pv.dense() == std::vector<Rational>{1, 1});
  CHECK(gamma::epsilon(3) == -1);
}

TEST_CASE("realization basics") {
  const Partition mu({3, 2});
  for (const auto& u : comb::enumerate_sst(mu, {2, 2, 1})) CHECK(weyl::oracle_coords(mu, u) == weyl::basis_vector(u));
  // more 1's in the lower rows than fit in the first row
  CHECK(weyl::oracle_coords(Partition({2, 2}), tab("1 2 / 1^2")).is_zero());
  CHECK(weyl::overflows(Partition({2, 2}), tab("1 2 / 1^2")));
}
