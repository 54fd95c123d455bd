#pragma once

#include "weyl_lanke/combinatorics.hpp"
#include "weyl_lanke/decomposition.hpp"
#include "weyl_lanke/linalg.hpp"
#include "weyl_lanke/tensor_algebra.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wl::lanke {

enum class WordKind { G1, G2 };

/// Bracketed permutation of 1..m with three brackets.
/// G1: [[[first], second], rest] with block sizes n, n-1, n-1.
/// G2: [[first], [second], rest] with block sizes n, n, n-2.
/// In normal form every block is increasing and, for G2, first[0] < second[0].
struct BracketWord {
  WordKind kind = WordKind::G1;
  std::vector<int> first, second, rest;

  /// "[[[1,2,3],4,5],6,7]" or "[[1,2,3],[4,5,6],7]".
  std::string to_string() const;

  friend auto operator<=>(const BracketWord&, const BracketWord&) = default;
  friend bool operator==(const BracketWord&, const BracketWord&) = default;
};

struct SignedWord {
  int sign = 1;
  BracketWord word;
};

/// Sorts every block (each sort contributes its sign) and, for G2, puts the
/// block with the smaller minimum first at the cost of a factor -1.
/// Throws std::invalid_argument on wrong block sizes or repeated letters.
SignedWord normalize(WordKind kind, std::vector<int> first, std::vector<int> second, std::vector<int> rest);

/// Accepts unsorted blocks; the returned sign records the normalization.
SignedWord parse_word(std::string_view text);

// ------------------------------------------------------------- relations

enum class Relation { R1, R2, R3, R4, R5 };
std::string relation_name(Relation r);

enum class Presentation { full, g1_r145, g1_r14 };
/// "full", "g1-r145", "g1-r14" (underscores accepted).
Presentation parse_presentation(std::string_view s);
std::string presentation_name(Presentation p);
std::vector<Relation> presentation_relations(Presentation p);

/// One relation instance for arbitrary orderings of the data. For R1, R2, R4
/// (x, y, z) have sizes (n, n-1, n-1); for R3 and R5 they have sizes (n, n, n-2).
LinearCombination<BracketWord> relation_element(Relation r, const std::vector<int>& x, const std::vector<int>& y,
                                                const std::vector<int>& z);

/// Normal-form words of one kind, in increasing order.
std::vector<BracketWord> words(int n, WordKind kind);

/// Column indexing for W (both kinds) or W(1) (G1 only).
class WordIndex {
 public:
  WordIndex(int n, bool with_g2);

  int n() const { return n_; }
  int m() const { return 3 * n_ - 2; }
  bool with_g2() const { return with_g2_; }
  int size() const { return static_cast<int>(words_.size()); }
  const BracketWord& word(int col) const { return words_[col]; }
  /// Column of a normal-form word, or -1 when it is not in this space.
  int column(const BracketWord& w) const;
  /// Column and sign of an arbitrary word given blockwise.
  std::pair<int, int> locate(WordKind kind, const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& c) const;

  linalg::SparseRow row_of(const LinearCombination<BracketWord>& x) const;

 private:
  int n_;
  bool with_g2_;
  std::vector<BracketWord> words_;
  std::unordered_map<std::uint64_t, int> cols_;
};

/// Every instance over increasing block data (R3 over ordered block pairs, R5
/// over unordered ones), exact duplicates removed. R2 and R3 need the G2 columns.
linalg::SparseMatrix relation_rows(const WordIndex& space, const std::vector<Relation>& which);

struct LieDimReport {
  int generators = 0;
  int relation_rows = 0;
  int dim = 0;
  linalg::RankReport rank;
};

LieDimReport lie_dim(int n, Presentation p, const linalg::RankOptions& opt = {});

/// Multilinear part of the two-bracket free algebra on 2n-1 letters.
int lie2_dim(int n);

// ------------------------------------------------------------ characters

/// W(1) modulo R1, R4, R5 over Z/p, with the quotient basis given by the non-pivot columns.
class Quotient {
 public:
  Quotient(int n, std::uint64_t p);

  int dim() const { return static_cast<int>(basis_.size()); }
  std::uint64_t prime() const { return elim_.prime(); }
  const WordIndex& index() const { return index_; }
  /// Trace of the permutation (one-line notation on 1..m) on the quotient, as a residue.
  std::uint64_t trace_mod(const std::vector<int>& perm) const;
  std::int64_t trace(const std::vector<int>& perm) const { return linalg::lift_symmetric(trace_mod(perm), prime()); }

 private:
  WordIndex index_;
  linalg::ModularEliminator elim_;
  std::vector<int> basis_;
};

struct CharacterOptions {
  bool prime_check = true;
  std::uint64_t seed = 20240611;
};

/// Shared quotient for a given n; built once and reused.
std::shared_ptr<const Quotient> quotient(int n, int prime_slot = 0, std::uint64_t seed = 20240611);

std::int64_t lie_character(int n, const comb::CycleType& c, const CharacterOptions& opt = {});

/// <chi_Lie, chi^p> for all p of 3n-2; only positive entries are kept.
decomp::SpechtDecomposition specht_multiplicities(int n, const CharacterOptions& opt = {});

// ----------------------------------------------------------------- bridge

struct BridgeReport {
  int n = 0;
  int codomain_dim = 0;
  int image_rank = 0;
  int cokernel_dim = 0;
  int lie_dim = 0;
  long rows_checked = 0;
  long rows_matched = 0;
  std::string first_mismatch;

  bool ok() const { return cokernel_dim == lie_dim && rows_checked == rows_matched; }
};

/// Sends x | y | z to the word [[[x], y], z].
LinearCombination<BracketWord> to_words(const LinearCombination<ExteriorTensor>& x);

BridgeReport schur_bridge(int n);

}  // namespace wl::lanke
