#include "oracles.hpp"

#include "weyl_lanke/lanke.hpp"
#include "weyl_lanke/verification.hpp"

#include <doctest.h>

#include <random>

using namespace wl;
using comb::Partition;
using lanke::Presentation;
using lanke::Relation;
using lanke::WordKind;

namespace {

lanke::BracketWord word(const char* s) {
  const auto sw = lanke::parse_word(s);
  REQUIRE(sw.sign == 1);
  return sw.word;
}

// Dimension of the degree-(3n-2) multilinear part, read off from the two shapes it decomposes into.
std::int64_t expected_dim(int n) {
  std::vector<int> a(n - 1, 3), b(n - 2, 3);
  a.push_back(1);
  b.insert(b.end(), {2, 1, 1});
  return oracle::syt_by_permutations(Partition(a)) + oracle::syt_by_permutations(Partition(b));
}

}  // namespace

TEST_CASE("bracket words and their normal form") {
  CHECK(lanke::parse_word("[[[1,2,3],4,5],6,7]").word.to_string() == "[[[1,2,3],4,5],6,7]");
  CHECK(lanke::parse_word("[[[2,1,3],4,5],6,7]").sign == -1);
  CHECK(lanke::parse_word("[[[2,1,3],5,4],6,7]").sign == 1);
  const auto g2 = lanke::parse_word("[[3,4],[1,2]]");
  CHECK(g2.sign == -1);
  CHECK(g2.word.to_string() == "[[1,2],[3,4]]");
  CHECK(g2.word.kind == WordKind::G2);
  CHECK_THROWS_AS(lanke::parse_word("[[[1,2],3],3]"), std::invalid_argument);
  CHECK_THROWS_AS(lanke::normalize(WordKind::G1, {1, 2, 3}, {4}, {5}), std::invalid_argument);

  CHECK(lanke::words(2, WordKind::G1).size() == 12);  // C(4,2) * 2
  CHECK(lanke::words(2, WordKind::G2).size() == 3);
  CHECK(lanke::words(3, WordKind::G1).size() == 35 * 6);
  const auto w = lanke::words(3, WordKind::G2);
  CHECK(w.size() == 35 * 4 / 2 * 1);
  CHECK(std::is_sorted(w.begin(), w.end()));
}

TEST_CASE("relation instances") {
  const auto r1 = lanke::relation_element(Relation::R1, {1, 2}, {3}, {4});
  CHECK(r1.size() == 3);
  CHECK(r1.coefficient(word("[[[1,2],3],4]")) == 1);
  CHECK(r1.coefficient(word("[[[1,3],2],4]")) == -1);
  CHECK(r1.coefficient(word("[[[2,3],1],4]")) == 1);

  // reordering a block only changes the overall sign
  std::mt19937_64 rng(5);
  for (auto r : {Relation::R1, Relation::R2, Relation::R4}) {
    std::vector<int> x{1, 2, 3}, y{4, 5}, z{6, 7};
    const auto base = lanke::relation_element(r, x, y, z);
    for (int t = 0; t < 6; ++t) {
      std::shuffle(x.begin(), x.end(), rng);
      std::shuffle(y.begin(), y.end(), rng);
      const auto moved = lanke::relation_element(r, x, y, z);
      const int s = oracle::sort_sign(x) * oracle::sort_sign(y);
      CHECK(moved == Rational(s) * base);
    }
  }

  const lanke::WordIndex space(2, true);
  CHECK(space.size() == 15);
  for (int c = 0; c < space.size(); ++c) CHECK(space.column(space.word(c)) == c);
  const auto [col, sign] = space.locate(WordKind::G2, {3, 4}, {1, 2}, {});
  CHECK(space.word(col).to_string() == "[[1,2],[3,4]]");
  CHECK(sign == -1);
  CHECK_THROWS(lanke::relation_rows(lanke::WordIndex(2, false), {Relation::R2}));
}

TEST_CASE("dimensions from the three presentations") {
  CHECK(expected_dim(2) == 6);
  CHECK(expected_dim(3) == 56);
  for (int n = 2; n <= 3; ++n)
    for (auto p : {Presentation::full, Presentation::g1_r145, Presentation::g1_r14})
      CHECK_MESSAGE(lanke::lie_dim(n, p).dim == expected_dim(n), lanke::presentation_name(p));
  CHECK(lanke::parse_presentation("g1_r145") == Presentation::g1_r145);
  CHECK(lanke::parse_presentation("g1-r14") == Presentation::g1_r14);
  CHECK_THROWS(lanke::parse_presentation("r2"));

  // modular backend forced on a small case
  linalg::RankOptions ro;
  ro.exact_limit = 0;
  const auto rep = lanke::lie_dim(3, Presentation::g1_r145, ro);
  CHECK(rep.dim == 56);
  CHECK(rep.rank.backend == "modular");
  CHECK(rep.rank.confirmed);
}

TEST_CASE("two-bracket part") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> shape(n - 1, 2);
    shape.push_back(1);
    CHECK(lanke::lie2_dim(n) == oracle::syt_by_permutations(Partition(shape)));
    CHECK(verify::syt_count(Partition(shape)) == oracle::syt_by_permutations(Partition(shape)));
  }
}

TEST_CASE("characters and Specht multiplicities") {
  for (const auto& c : comb::partitions_of(4)) {
    const auto got = lanke::lie_character(2, c);
    CHECK(got == comb::mn_character(Partition({3, 1}), c) + comb::mn_character(Partition({2, 1, 1}), c));
  }
  CHECK(lanke::lie_character(3, Partition(std::vector<int>(7, 1))) == 56);
  CHECK(lanke::specht_multiplicities(2).to_string() == "(2,1,1):1 (3,1):1");
  CHECK(lanke::specht_multiplicities(3).to_string() == "(3,2,1,1):1 (3,3,1):1");

  // traces are class functions
  const auto q = lanke::quotient(2);
  CHECK(q->dim() == 6);
  CHECK(q->trace({2, 1, 3, 4}) == q->trace({1, 2, 4, 3}));
  CHECK(q->trace({2, 3, 1, 4}) == q->trace({1, 4, 2, 3}));
}

TEST_CASE("exterior relations land on the word relations") {
  for (int n = 2; n <= 3; ++n) {
    const auto b = lanke::schur_bridge(n);
    CHECK(b.ok());
    CHECK(b.cokernel_dim == expected_dim(n));
    CHECK(b.rows_checked > 0);
  }
  LinearCombination<ExteriorTensor> x;
  x.add(ExteriorTensor::parse("1 2 | 3 | 4"), 2);
  CHECK(lanke::to_words(x).coefficient(word("[[[1,2],3],4]")) == 2);
}
