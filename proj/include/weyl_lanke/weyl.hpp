#pragma once

#include "weyl_lanke/combinatorics.hpp"
#include "weyl_lanke/linalg.hpp"
#include "weyl_lanke/tensor_algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace wl::weyl {

using comb::Partition;
using comb::Tableau;

/// Element of K_mu written in the semistandard basis of one weight space.
struct WeylVector {
  Partition shape;
  std::vector<int> weight;
  LinearCombination<Tableau> coords;

  bool is_zero() const { return coords.empty(); }
  Rational coefficient(const Tableau& t) const { return coords.coefficient(t); }
  /// Coordinates listed in canonical basis order T_0, T_1, ...
  std::vector<Rational> dense() const;
  /// "−1·(1^2 3 / 2 3) −2·(1^2 2 / 3^2)".
  std::string to_string() const;

  friend bool operator==(const WeylVector& a, const WeylVector& b) {
    return a.shape == b.shape && a.weight == b.weight && a.coords == b.coords;
  }
};

/// Basis element T_i of the given shape and weight.
WeylVector basis_vector(const Tableau& u);

// ------------------------------------------------------------ phi and psi

/// phi_S : D(weight S) -> D(shape S). x must have weight(S) as profile.
LinearCombination<DividedTensor> phi(const Tableau& s, const DividedTensor& x);
LinearCombination<DividedTensor> phi(const Tableau& s, const LinearCombination<DividedTensor>& x);

/// psi_S : Λ(weight S) -> Λ(shape S); the regrouping of tensor factors is a plain permutation.
LinearCombination<ExteriorTensor> psi(const Tableau& s, const ExteriorTensor& x);
LinearCombination<ExteriorTensor> psi(const Tableau& s, const LinearCombination<ExteriorTensor>& x);

/// Sign picked up when the factor swaps of phi_S are transported to exterior
/// powers: (-1)^{sum a_ij a_kl} over i > k, j < l.
int transport_sign(const Tableau& s);

// --------------------------------------------------------------- oracle

/// D(mu) -> Λ(mu'): expand each row into its distinct words, send the t-th
/// letter of a row to column t, multiply every column top to bottom.
LinearCombination<ExteriorTensor> co_schur(const DividedTensor& x);
LinearCombination<ExteriorTensor> co_schur(const LinearCombination<DividedTensor>& x);

/// Images of e^U (U semistandard of one shape and weight) under co_schur,
/// with a nonsingular square block used to read off coordinates.
class Realization {
 public:
  Realization(Partition mu, std::vector<int> weight);

  const Partition& shape() const { return shape_; }
  const std::vector<int>& weight() const { return weight_; }
  const std::vector<Tableau>& basis() const { return basis_; }

  /// Coordinates of a vector in the span of the basis images.
  /// Throws std::logic_error if the vector lies outside that span.
  std::vector<Rational> solve(const LinearCombination<ExteriorTensor>& image) const;

 private:
  Partition shape_;
  std::vector<int> weight_;
  std::vector<Tableau> basis_;
  std::vector<LinearCombination<ExteriorTensor>> images_;
  std::vector<ExteriorTensor> keys_;
  linalg::DenseMatrix inverse_;
};

/// Cached per (shape, weight); safe to call concurrently.
std::shared_ptr<const Realization> realization(const Partition& mu, const std::vector<int>& weight);

/// Coordinates of pi_mu(x) for x in D(mu), computed through co_schur.
WeylVector oracle_coords(const Partition& mu, const LinearCombination<DividedTensor>& x);
WeylVector oracle_coords(const Partition& mu, const Tableau& s);

// --------------------------------------------------------- straightening

/// Two-row raising relation for letter v: rewrites pi_nu(e^S) by moving every v
/// of row 2 to row 1 and trading them for other letters of row 1.
/// Throws std::invalid_argument if v does not occur in row 2.
LinearCombination<Tableau> straighten_pair(const Partition& nu, const Tableau& s, int v);

/// The same relation applied to rows (j, j+1) of a taller tableau.
LinearCombination<Tableau> raise_rows(const Partition& mu, const Tableau& s, int j, int v);

/// Repeatedly raises the letter v (bottom pair first) until no row below the
/// top one holds a v that can still move. Terms killed by the overflow rule vanish.
LinearCombination<Tableau> raise_letter(const Partition& mu, const LinearCombination<Tableau>& x, int v);

struct StraightenStats {
  long moves = 0;
  long zero_terms = 0;
  long fallback_terms = 0;
};

WeylVector straighten(const Partition& mu, const Tableau& s, StraightenStats* stats = nullptr);
WeylVector straighten(const Partition& mu, const LinearCombination<Tableau>& x, StraightenStats* stats = nullptr);
WeylVector straighten(const Partition& mu, const LinearCombination<DividedTensor>& x, StraightenStats* stats = nullptr);

/// True if some letter is forced twice into one column: rows j.. hold more than mu_j copies.
bool overflows(const Partition& mu, const Tableau& s);

/// pi_U(x) = pi_mu(phi_U(x)).
WeylVector pi_U(const Tableau& u, const LinearCombination<DividedTensor>& x);
WeylVector pi_U(const Tableau& u, const DividedTensor& x);

}  // namespace wl::weyl
