#pragma once

// Brute-force counterparts used only by the tests.

#include "weyl_lanke/combinatorics.hpp"
#include "weyl_lanke/linear_combination.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using wl::comb::Partition;

// Cells of a diagram in row-reading order.
inline std::vector<std::pair<int, int>> cells(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p[r]; ++c) out.emplace_back(r, c);
  return out;
}

// True if the filling (row-reading order) is weakly increasing along rows and
// strictly increasing down columns.
inline bool semistandard(const Partition& p, const std::vector<int>& fill) {
  std::vector<std::vector<int>> grid(p.length());
  std::size_t k = 0;
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p[r]; ++c) grid[r].push_back(fill[k++]);
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p[r]; ++c) {
      if (c > 0 && grid[r][c - 1] > grid[r][c]) return false;
      if (r > 0 && grid[r - 1][c] >= grid[r][c]) return false;
    }
  return true;
}

// Every arrangement of the multiset 1^{w1} 2^{w2} ... into the diagram.
inline std::int64_t kostka_by_fillings(const Partition& p, const std::vector<int>& weight) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < weight.size(); ++i) letters.insert(letters.end(), weight[i], static_cast<int>(i) + 1);
  if (static_cast<int>(letters.size()) != p.size()) return 0;
  std::int64_t count = 0;
  do {
    if (semistandard(p, letters)) ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

// Standard tableaux: all permutations of 1..m placed in the diagram.
inline std::int64_t syt_by_permutations(const Partition& p) {
  return kostka_by_fillings(p, std::vector<int>(p.size(), 1));
}

// Semistandard tableaux with entries in 1..letters, by trying every weight.
inline std::int64_t sst_count_by_weights(const Partition& p, int letters) {
  std::int64_t total = 0;
  std::vector<int> w(letters, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == letters - 1) {
      w[i] = left;
      total += kostka_by_fillings(p, w);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      w[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, p.size());
  return total;
}

// Sign of the permutation sorting v.
inline int sort_sign(std::vector<int> v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) s = -s;
  return s;
}

inline wl::Integer factorial(int k) {
  wl::Integer r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace oracle
