#include "oracles.hpp"

#include "weyl_lanke/gamma_maps.hpp"
#include "weyl_lanke/weyl.hpp"

#include <doctest.h>

using namespace wl;
using gamma::MapKind;

namespace {

DividedMonomial dmono(std::vector<int> e) { return DividedMonomial(std::move(e)); }

LinearCombination<ExteriorTensor> ext(std::initializer_list<std::pair<const char*, int>> terms) {
  LinearCombination<ExteriorTensor> out;
  for (const auto& [t, c] : terms) out.add(ExteriorTensor::parse(t), c);
  return out;
}

std::vector<int> ones(int m) { return std::vector<int>(m, 1); }

}  // namespace

TEST_CASE("map selectors and shapes") {
  CHECK(gamma::parse_kind("gamma2") == MapKind::gamma2);
  CHECK(gamma::kind_name(MapKind::g) == "g");
  CHECK_THROWS_AS(gamma::parse_kind("gamma4"), std::invalid_argument);
  CHECK(gamma::lambda_shape(3) == comb::Partition({3, 2, 2}));
  CHECK(gamma::mu_shape(3) == comb::Partition({4, 2, 1}));
  CHECK(gamma::nu_shape(3) == comb::Partition({3, 3, 1}));
  CHECK_THROWS(gamma::make_map(MapKind::g, 3));
  CHECK_THROWS(gamma::make_map(MapKind::gamma1, 1));
}

TEST_CASE("images of the cyclic generators") {
  for (int n = 2; n <= 5; ++n) {
    const int eps = gamma::epsilon(n);
    const auto lam = divided_generator(gamma::lambda_shape(n).parts());

    LinearCombination<DividedTensor> g1(lam);
    g1.add(DividedTensor{{dmono({1, n - 1}), dmono({n - 1}), dmono({0, 0, n - 1})}}, eps);
    CHECK(gamma::gamma_image(gamma::make_map(MapKind::gamma1, n), lam) == g1);

    LinearCombination<DividedTensor> g2(lam);
    g2.add(DividedTensor{{dmono({n}), dmono({0, 0, n - 1}), dmono({0, n - 1})}}, eps);
    g2.add(DividedTensor{{dmono({0, 1, n - 1}), dmono({1, n - 2}), dmono({n - 1})}}, eps);
    CHECK(gamma::gamma_image(gamma::make_map(MapKind::gamma2, n), lam) == g2);

    const auto g3map = gamma::make_map(MapKind::gamma3, n);
    CHECK(g3map.domain == std::vector<int>{n, n, n - 2});
    LinearCombination<DividedTensor> g3;
    g3.add(DividedTensor{{dmono({n}), dmono({0, 1, n - 2}), dmono({0, n - 1})}}, 1);
    g3.add(DividedTensor{{dmono({0, n}), dmono({1, 0, n - 2}), dmono({n - 1})}}, eps);
    CHECK(gamma::gamma_image(g3map, g3map.generator()) == g3);
  }
  const auto g = gamma::make_map(MapKind::gamma1, 3);
  CHECK_THROWS(gamma::gamma_image(g, DividedTensor::parse("1 | 2 | 3")));
}

TEST_CASE("gamma maps preserve weights") {
  for (int n = 2; n <= 3; ++n)
    for (auto kind : {MapKind::gamma1, MapKind::gamma2, MapKind::gamma3}) {
      const auto map = gamma::make_map(kind, n);
      for (const auto& x : divided_basis(map.domain, {n, n - 1, n - 1}))
        for (const auto& [t, c] : gamma::gamma_image(map, x)) CHECK(weight_of(t) == weight_of(x));
    }
}

TEST_CASE("the exterior map g") {
  CHECK(gamma::g_image(2, ExteriorTensor::parse("1 2 | 3")) == ext({{"1 2 | 3", 1}, {"1 3 | 2", -1}, {"2 3 | 1", 1}}));
  // when y lies inside x the one surviving product cancels the identity term
  CHECK(gamma::g_image(2, ExteriorTensor::parse("1 2 | 1")).empty());
  CHECK(gamma::g_image(3, ExteriorTensor::parse("1 2 3 | 1 2")).empty());
  // cokernel sizes against semistandard counts of the conjugate shape
  CHECK(gamma::g_cokernel_dim(2, 3) == 8);
  CHECK(gamma::g_cokernel_dim(2, 3) == oracle::sst_count_by_weights(comb::Partition({2, 1}).conjugate(), 3));
  CHECK(gamma::g_cokernel_dim(3, 5) == oracle::sst_count_by_weights(comb::Partition({3, 2}).conjugate(), 5));
  CHECK(gamma::g_cokernel_dim(3, 5) == 75);
}

TEST_CASE("exterior closed forms") {
  const auto w = ExteriorTensor::parse("1 2 | 3 | 4");
  CHECK(gamma::omega_gamma1(w) == ext({{"1 2 | 3 | 4", 1}, {"1 3 | 2 | 4", -1}, {"2 3 | 1 | 4", 1}}));
  CHECK(gamma::omega_gamma1(w) == LinearCombination<ExteriorTensor>(w) - weyl::psi(comb::Tableau::parse("1 2 / 1 / 3"), w));
  CHECK(gamma::omega_gamma3(ExteriorTensor::parse("1 2 | 3 4 | ()")) ==
        ext({{"1 2 | 3 | 4", 1}, {"1 2 | 4 | 3", -1}, {"3 4 | 1 | 2", 1}, {"3 4 | 2 | 1", -1}}));
  // with y = z the swap cancels w and every y_i z vanishes
  CHECK(gamma::omega_gamma2(ExteriorTensor::parse("1 2 | 3 | 3")).empty());

  for (int n = 2; n <= 3; ++n)
    for (auto kind : {MapKind::gamma1, MapKind::gamma2, MapKind::gamma3}) {
      const auto map = gamma::make_map(kind, n);
      for (const auto& w1 : exterior_basis(map.domain, ones(3 * n - 2)))
        CHECK_MESSAGE(gamma::transported_image(map, w1) == gamma::omega_image(kind, w1), w1.to_string());
    }
}
