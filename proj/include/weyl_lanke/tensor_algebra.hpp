#pragma once

#include "weyl_lanke/combinatorics.hpp"
#include "weyl_lanke/linear_combination.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace wl {

/// e_1^{(a_1)} ... e_N^{(a_N)} in the divided power algebra; exps trailing zeros stripped.
struct DividedMonomial {
  std::vector<int> exps;

  DividedMonomial() = default;
  explicit DividedMonomial(std::vector<int> e);

  int degree() const;
  int exponent(int letter) const { return letter >= 1 && letter <= static_cast<int>(exps.size()) ? exps[letter - 1] : 0; }

  std::string to_string() const;
  static DividedMonomial parse(std::string_view text);

  friend auto operator<=>(const DividedMonomial&, const DividedMonomial&) = default;
  friend bool operator==(const DividedMonomial&, const DividedMonomial&) = default;
};

/// e_{i_1} ... e_{i_k} in the exterior algebra with i_1 < ... < i_k.
struct ExteriorMonomial {
  std::vector<int> indices;

  ExteriorMonomial() = default;
  /// Throws unless indices are strictly increasing and positive.
  explicit ExteriorMonomial(std::vector<int> idx);

  int degree() const { return static_cast<int>(indices.size()); }
  bool contains(int letter) const;

  /// "1 2 4"; the unit prints as "()".
  std::string to_string() const;
  static ExteriorMonomial parse(std::string_view text);

  friend auto operator<=>(const ExteriorMonomial&, const ExteriorMonomial&) = default;
  friend bool operator==(const ExteriorMonomial&, const ExteriorMonomial&) = default;
};

template <typename M>
struct Tensor {
  std::vector<M> factors;

  std::vector<int> profile() const {
    std::vector<int> p;
    for (const auto& f : factors) p.push_back(f.degree());
    return p;
  }
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += " | ";
      out += factors[i].to_string();
    }
    return out;
  }
  /// Factors separated by "|" or "⊗".
  static Tensor parse(std::string_view text);

  friend auto operator<=>(const Tensor&, const Tensor&) = default;
  friend bool operator==(const Tensor&, const Tensor&) = default;
};

using DividedTensor = Tensor<DividedMonomial>;
using ExteriorTensor = Tensor<ExteriorMonomial>;
using DividedCombination = LinearCombination<DividedTensor>;
using ExteriorCombination = LinearCombination<ExteriorTensor>;

std::vector<std::string_view> split_tensor_text(std::string_view text);

template <typename M>
Tensor<M> Tensor<M>::parse(std::string_view text) {
  Tensor t;
  for (auto piece : split_tensor_text(text)) t.factors.push_back(M::parse(piece));
  return t;
}

/// Letter multiplicities of a tensor (the torus weight), trailing zeros stripped.
std::vector<int> weight_of(const DividedTensor& t);
std::vector<int> weight_of(const ExteriorTensor& t);

// ------------------------------------------------------------ structure maps

LinearCombination<DividedMonomial> dp_product(const DividedMonomial& a, const DividedMonomial& b);
/// Comultiplication component with the given factor degrees (any number of factors).
LinearCombination<DividedTensor> dp_comultiply(const DividedMonomial& a, const std::vector<int>& degrees);

LinearCombination<ExteriorMonomial> ext_product(const ExteriorMonomial& a, const ExteriorMonomial& b);
LinearCombination<ExteriorTensor> ext_comultiply(const ExteriorMonomial& a, const std::vector<int>& degrees);

/// Product in the exterior algebra as a (sign, monomial) pair; sign 0 when it vanishes.
std::pair<int, ExteriorMonomial> ext_product_signed(const ExteriorMonomial& a, const ExteriorMonomial& b);

/// Bilinear extensions.
LinearCombination<DividedMonomial> dp_product(const LinearCombination<DividedMonomial>& a,
                                              const LinearCombination<DividedMonomial>& b);
LinearCombination<ExteriorMonomial> ext_product(const LinearCombination<ExteriorMonomial>& a,
                                                const LinearCombination<ExteriorMonomial>& b);

/// Tensor product of combinations (concatenation of factors).
template <typename M>
LinearCombination<Tensor<M>> tensor_product(const LinearCombination<Tensor<M>>& a,
                                            const LinearCombination<Tensor<M>>& b) {
  LinearCombination<Tensor<M>> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      Tensor<M> t = x;
      t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
      out.add(t, cx * cy);
    }
  return out;
}

// -------------------------------------------------------------- enumerators

/// 1^{(a_1)} | 2^{(a_2)} | ... ; the cyclic generator of D(a).
DividedTensor divided_generator(const std::vector<int>& profile);

/// e^S: the divided tensor whose factors are the rows of S.
DividedTensor tableau_tensor(const comb::Tableau& s);
/// Inverse of tableau_tensor; the factor degrees must form a partition.
comb::Tableau tensor_tableau(const DividedTensor& t);

/// All basis tensors of D(profile) with the given weight.
std::vector<DividedTensor> divided_basis(const std::vector<int>& profile, const std::vector<int>& weight);
/// All basis tensors of Λ(profile) with the given weight.
std::vector<ExteriorTensor> exterior_basis(const std::vector<int>& profile, const std::vector<int>& weight);

std::string format(const LinearCombination<DividedTensor>& c);
std::string format(const LinearCombination<ExteriorTensor>& c);

}  // namespace wl
