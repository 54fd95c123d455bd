#pragma once

#include "weyl_lanke/combinatorics.hpp"
#include "weyl_lanke/tensor_algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wl::gamma {

using comb::Partition;
using comb::Tableau;

enum class MapKind { gamma1, gamma2, gamma3, g };

std::string kind_name(MapKind k);
/// "gamma1", "gamma2", "gamma3", "g"; throws std::invalid_argument otherwise.
MapKind parse_kind(std::string_view s);

/// (n, n-1, n-1), (n+1, n-1, n-2), (n, n, n-2).
Partition lambda_shape(int n);
Partition mu_shape(int n);
Partition nu_shape(int n);
/// (-1)^n
int epsilon(int n);

struct SignedTableau {
  int sign = 1;
  Tableau tableau;
};

/// An endomorphism-style map D(domain) -> D(codomain) given as a signed sum of phi_S.
struct GammaMap {
  MapKind kind = MapKind::gamma1;
  int n = 2;
  std::vector<int> domain;
  std::vector<int> codomain;
  std::vector<SignedTableau> terms;

  std::string name() const { return kind_name(kind); }
  /// e^domain, the cyclic generator of the domain.
  DividedTensor generator() const { return divided_generator(domain); }
};

/// The tableaux S(1..4) and Q(1), Q(2) assembled into gamma1, gamma2 or gamma3.
/// Throws for MapKind::g, which is not of this form, and for n < 2.
GammaMap make_map(MapKind kind, int n);

LinearCombination<DividedTensor> gamma_image(const GammaMap& g, const DividedTensor& x);
LinearCombination<DividedTensor> gamma_image(const GammaMap& g, const LinearCombination<DividedTensor>& x);

// -------------------------------------------------------------- the g map

/// x ⊗ y - (mult ⊗ 1)(1 ⊗ swap)(Δ_{1,n-1} ⊗ 1)(x ⊗ y) on Λ^n ⊗ Λ^{n-1}.
LinearCombination<ExteriorTensor> g_image(int n, const ExteriorTensor& x);

/// dim of coker g on Λ^n ⊗ Λ^{n-1} over letters 1..letters.
int g_cokernel_dim(int n, int letters);

// ---------------------------------------------------- exterior transports

/// The exterior map obtained from a gamma map term by term: sum of
/// sign * transport_sign(S) * psi_S.
LinearCombination<ExteriorTensor> transported_image(const GammaMap& g, const ExteriorTensor& w);

/// Closed forms. For w = x | y | z, x[i] drops the i-th letter of x after moving
/// it to the front, which costs (-1)^{i-1}.
LinearCombination<ExteriorTensor> omega_gamma1(const ExteriorTensor& w);
LinearCombination<ExteriorTensor> omega_gamma2(const ExteriorTensor& w);
/// u = x' | y' | z' in Λ(n, n, n-2).
LinearCombination<ExteriorTensor> omega_gamma3(const ExteriorTensor& u);
LinearCombination<ExteriorTensor> omega_image(MapKind kind, const ExteriorTensor& w);

}  // namespace wl::gamma
