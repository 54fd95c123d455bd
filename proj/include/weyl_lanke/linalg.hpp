#pragma once

#include "weyl_lanke/linear_combination.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wl::linalg {

/// Sparse integer row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, std::int64_t>>;

struct SparseMatrix {
  int cols = 0;
  std::vector<SparseRow> rows;
};

// ----------------------------------------------------------------- modular

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t x);
/// Uniformly drawn prime in (2^61, 2^62).
std::uint64_t random_prime(std::mt19937_64& rng);
std::uint64_t to_mod(std::int64_t v, std::uint64_t p);
/// Representative in (-p/2, p/2].
std::int64_t lift_symmetric(std::uint64_t v, std::uint64_t p);

/// Incremental row echelon form over Z/p. Every stored pivot row is monic
/// and vanishes in the pivot columns created before it.
class ModularEliminator {
 public:
  ModularEliminator(int cols, std::uint64_t p);

  /// Reduces the row; returns true if it enlarged the row space.
  bool add_row(const SparseRow& row);
  bool add_row_mod(const std::vector<std::pair<int, std::uint64_t>>& row);

  int rank() const { return static_cast<int>(pivot_cols_.size()); }
  int cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }

  /// Back-substitution to reduced row echelon form.
  void reduce_fully();
  bool fully_reduced() const { return fully_reduced_; }

  bool is_pivot(int col) const { return pivot_of_col_[col] >= 0; }
  /// Columns with no pivot, increasing.
  std::vector<int> free_columns() const;
  /// Pivot row whose leading column is col (requires is_pivot(col)).
  const std::vector<std::pair<int, std::uint64_t>>& pivot_row(int col) const { return rows_[pivot_of_col_[col]]; }

 private:
  int cols_;
  std::uint64_t p_;
  std::vector<int> pivot_cols_;
  std::vector<int> pivot_of_col_;
  std::vector<std::vector<std::pair<int, std::uint64_t>>> rows_;
  std::vector<std::uint64_t> acc_;
  std::vector<char> touched_;
  bool fully_reduced_ = false;
};

// ------------------------------------------------------------------- exact

/// Fraction-free sparse elimination over Z.
int exact_rank(const SparseMatrix& m);

struct RankOptions {
  /// Largest max(rows, cols) handled by the exact backend.
  int exact_limit = 5000;
  /// Confirm modular ranks with a second prime and an exact minor.
  bool prime_check = true;
  std::uint64_t seed = 20240611;
};

struct RankReport {
  int rank = 0;
  std::string backend;  // "exact" or "modular"
  std::vector<std::uint64_t> primes;
  bool confirmed = true;
  std::string detail;
};

RankReport rank(const SparseMatrix& m, const RankOptions& opt = {});

// ---------------------------------------------------------- dense rational

using DenseMatrix = std::vector<std::vector<Rational>>;

int rational_rank(DenseMatrix m);

/// Gauss-Jordan in place; returns pivot columns.
std::vector<int> row_reduce(DenseMatrix& m);

/// Inverse of a square nonsingular matrix; throws if singular.
DenseMatrix inverse(DenseMatrix m);

}  // namespace wl::linalg
