#pragma once

#include "weyl_lanke/combinatorics.hpp"
#include "weyl_lanke/gamma_maps.hpp"
#include "weyl_lanke/weyl.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wl::decomp {

using comb::Partition;
using comb::Tableau;

/// Hom(D(weight), K_shape) with basis pi_U, U semistandard of the given shape and weight.
struct HomSpace {
  Partition shape;
  std::vector<int> weight;
  std::vector<Tableau> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

HomSpace hom_space(const Partition& shape, const std::vector<int>& weight);

/// Image of a cyclic generator: an element of D(lambda) of a fixed weight.
struct Generator {
  std::string name;
  std::vector<int> weight;
  LinearCombination<DividedTensor> image;
};

Generator make_generator(const gamma::GammaMap& g);
std::vector<Generator> generators(int n, const std::vector<gamma::MapKind>& maps);

/// Row U holds the coordinates of pi_U(image) for every generator, side by side;
/// U runs over semistandard tableaux of shape mu and weight lambda.
linalg::DenseMatrix restriction_matrix(int n, const Partition& mu, const std::vector<Generator>& gens);
int restriction_rank(int n, const Partition& mu, const std::vector<Generator>& gens);
int cokernel_multiplicity(int n, const Partition& mu, const std::vector<Generator>& gens);

struct SpechtDecomposition {
  std::vector<std::pair<Partition, int>> entries;  // increasing partitions, positive multiplicities

  /// "(3,2,2):1 (4,2,1):1"; "0" when empty.
  std::string to_string() const;
  friend bool operator==(const SpechtDecomposition&, const SpechtDecomposition&) = default;
};

/// Partitions of 3n-2 with at most three parts that dominate lambda.
std::vector<Partition> scan_domain(int n);

SpechtDecomposition decompose_cokernel(int n, const std::vector<gamma::MapKind>& maps);

/// Adding gamma3 to {gamma1, gamma2} leaves every restriction rank unchanged.
bool check_image_inclusion(int n);

// ---------------------------------------------------- Pieri closed forms

/// U_0, ..., U_{c1}: the semistandard tableaux of the constituent's shape and weight lambda.
std::vector<Tableau> pieri_family(const comb::PieriConstituent& pc);

/// Predicted coordinates (T_0..T_{c1}) of pi_{U_i} o gamma1 (e^lambda).
std::vector<Rational> predicted_gamma1_row(const comb::PieriConstituent& pc, int i);
/// Predicted coordinates of pi_{U_0} o gamma2 (e^lambda); pc must not be lambda itself.
std::vector<Rational> predicted_gamma2_row(const comb::PieriConstituent& pc);

/// Coordinates of pi_U(gamma(e^domain)) in the canonical basis of the image weight.
std::vector<Rational> composed_coords(const Tableau& u, const Generator& gen);

}  // namespace wl::decomp
