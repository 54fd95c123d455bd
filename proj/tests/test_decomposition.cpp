#include "oracles.hpp"

#include "weyl_lanke/decomposition.hpp"
#include "weyl_lanke/weyl.hpp"

#include <doctest.h>

using namespace wl;
using comb::Partition;
using gamma::MapKind;

namespace {

Integer multisets(int letters, int k) {
  return oracle::factorial(letters + k - 1) / (oracle::factorial(k) * oracle::factorial(letters - 1));
}

}  // namespace

TEST_CASE("cokernel decompositions") {
  CHECK(decomp::decompose_cokernel(3, {MapKind::gamma1, MapKind::gamma2}).to_string() == "(3,2,2):1 (4,2,1):1");
  CHECK(decomp::decompose_cokernel(3, {MapKind::gamma1, MapKind::gamma2, MapKind::gamma3}).to_string() ==
        "(3,2,2):1 (4,2,1):1");
  CHECK(decomp::decompose_cokernel(2, {MapKind::gamma2, MapKind::gamma1}) ==
        decomp::decompose_cokernel(2, {MapKind::gamma1, MapKind::gamma2}));
  CHECK(decomp::SpechtDecomposition{}.to_string() == "0");

  for (int n = 2; n <= 3; ++n) {
    decomp::SpechtDecomposition want;
    for (const auto& pc : comb::pieri_constituents(n)) want.entries.emplace_back(pc.shape(), 1);
    std::sort(want.entries.begin(), want.entries.end());
    CHECK(decomp::decompose_cokernel(n, {MapKind::gamma1}) == want);
  }
}

TEST_CASE("restriction ranks at the two surviving shapes") {
  for (int n = 2; n <= 4; ++n) {
    const auto lam = gamma::lambda_shape(n);
    const auto mu = gamma::mu_shape(n);
    const auto g1 = decomp::generators(n, {MapKind::gamma1});
    const auto g3 = decomp::generators(n, {MapKind::gamma3});
    const auto g12 = decomp::generators(n, {MapKind::gamma1, MapKind::gamma2});
    CHECK(decomp::restriction_rank(n, lam, g1) == 0);
    CHECK(decomp::restriction_rank(n, mu, g1) == 1);
    CHECK(decomp::restriction_rank(n, lam, g3) == 0);
    CHECK(decomp::restriction_rank(n, mu, g3) == 0);
    CHECK(decomp::cokernel_multiplicity(n, lam, g12) == 1);
    CHECK(decomp::cokernel_multiplicity(n, mu, g12) == 1);
    for (const auto& pc : comb::pieri_constituents(n))
      if (pc.shape() != lam && pc.shape() != mu) CHECK(decomp::cokernel_multiplicity(n, pc.shape(), g12) == 0);
  }
}

TEST_CASE("gamma3 adds nothing to the image") {
  CHECK(decomp::check_image_inclusion(2));
  CHECK(decomp::check_image_inclusion(3));
}

TEST_CASE("Hom spaces and the weight-space count") {
  const auto h = decomp::hom_space(Partition({4, 2, 1}), {3, 2, 2});
  CHECK(h.dim() == 2);
  CHECK(h.basis[0].to_string() == "1^3 3 / 2^2 / 3");

  for (int n = 2; n <= 3; ++n) {
    const int letters = 3 * n - 2;
    const auto lam = gamma::lambda_shape(n);
    Integer total = 0;
    for (const auto& mu : comb::partitions_of(lam.size()))
      total += Integer(static_cast<long>(comb::kostka(mu, lam.parts()))) * static_cast<long>(comb::sst_count(mu, letters));
    Integer dim = 1;
    for (int part : lam.parts()) dim *= multisets(letters, part);
    CHECK(total == dim);
  }
}

TEST_CASE("Pieri closed forms") {
  for (int n = 2; n <= 3; ++n) {
    const auto g1 = decomp::generators(n, {MapKind::gamma1});
    const auto g2 = decomp::generators(n, {MapKind::gamma2});
    for (const auto& pc : comb::pieri_constituents(n)) {
      const auto family = decomp::pieri_family(pc);
      REQUIRE(static_cast<int>(family.size()) == pc.c1 + 1);
      CHECK(weyl::pi_U(family[0], divided_generator(gamma::lambda_shape(n).parts())) == weyl::basis_vector(family[0]));
      for (int i = 0; i <= pc.c1; ++i) {
        const auto row = decomp::composed_coords(family[i], g1[0]);
        CHECK(row == decomp::predicted_gamma1_row(pc, i));
        CHECK(row[0] == 0);
      }
      if (pc.shape() != gamma::lambda_shape(n) && pc.shape() != gamma::mu_shape(n)) {
        const auto row = decomp::composed_coords(family[0], g2[0]);
        CHECK(row == decomp::predicted_gamma2_row(pc));
        CHECK(row[0] != 0);
      }
    }
  }
}
