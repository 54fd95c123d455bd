#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wl::comb {

/// Integer partition stored dense, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are nonnegative and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// Part i (0-based); zero past the length.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// Dominance order on partitions of the same size.
  bool dominates(const Partition& other) const;

  /// "4,2,1"; the empty partition prints as "".
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Cycle lengths of a conjugacy class of the symmetric group.
using CycleType = Partition;

/// All partitions of m with at most max_parts parts, in increasing lexicographic order.
std::vector<Partition> partitions_of(int m, int max_parts = -1);

/// Letter-count vector of one row ("1^2 3" -> {2,0,1}); trailing zeros stripped.
using RowCounts = std::vector<int>;

/// "v^k" tokens separated by blanks; "^1" may be omitted, "()" is the empty row.
RowCounts parse_row(std::string_view text);
std::string format_row(const RowCounts& row);

/// Tableau as its entry-multiplicity matrix: rows()[i][j] is the number of
/// letters j+1 in row i. Rows are row-sorted by construction, so every
/// Tableau is row semistandard.
class Tableau {
 public:
  Tableau() = default;
  /// Shape is read off the row sums and must be a partition.
  explicit Tableau(std::vector<RowCounts> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<RowCounts>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  /// a_ij with 0-based row and 1-based letter.
  int count(int row, int letter) const;
  /// Largest letter present.
  int max_letter() const;
  /// alpha_j = sum_i a_ij, trailing zeros stripped.
  std::vector<int> weight() const;

  bool is_semistandard() const;

  /// Letters read row by row from the bottom row up, each row left to right.
  const std::vector<int>& reading_word() const { return word_; }

  /// "1^3 3 / 2^2 3 / 3^2".
  std::string to_string() const;
  static Tableau parse(std::string_view text);

  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.word_ <=> b.word_;
  }
  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.word_ == b.word_;
  }

 private:
  std::vector<RowCounts> rows_;
  Partition shape_;
  std::vector<int> word_;
};

/// Superstandard tableau of shape mu: row i filled with the letter i.
Tableau superstandard(const Partition& mu);

/// Semistandard tableaux of the given shape and weight, in canonical order
/// (lexicographic in the bottom-up reading word).
std::vector<Tableau> enumerate_sst(const Partition& shape, const std::vector<int>& weight);

/// Number of semistandard tableaux of given shape and weight.
std::int64_t kostka(const Partition& shape, const std::vector<int>& weight);

/// Number of semistandard tableaux of the given shape with entries in 1..n_letters.
std::int64_t sst_count(const Partition& shape, int n_letters);

/// Constituent (n+c1, n-1+c2, c3) of K_(n,n-1) (x) D_(n-1) under Pieri's rule.
struct PieriConstituent {
  int n = 0;
  int c1 = 0;
  int c2 = 0;
  int c3 = 0;

  int c() const { return c1 + c2; }
  Partition shape() const;
  friend bool operator==(const PieriConstituent&, const PieriConstituent&) = default;
};

std::vector<PieriConstituent> pieri_constituents(int n);

/// Number of standard Young tableaux (hook length formula).
std::int64_t specht_dim(const Partition& p);

/// Irreducible character value chi^p at the class of cycle type c (Murnaghan-Nakayama).
std::int64_t mn_character(const Partition& p, const CycleType& c);

/// z_c = prod_k k^{m_k} m_k!, so that the class of c has |S_m| / z_c elements.
std::int64_t centralizer_order(const CycleType& c);
std::int64_t factorial(int m);

/// A permutation of {1..m} (one-line notation, image of i at index i-1)
/// with the cycles of c laid out consecutively.
std::vector<int> class_representative(const CycleType& c);
/// Cycle type of a permutation given in one-line notation on {1..m}.
CycleType cycle_type_of(const std::vector<int>& perm);

}  // namespace wl::comb
