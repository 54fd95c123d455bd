#include "weyl_lanke/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace wl::linalg {

// ----------------------------------------------------------------- modular

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (x % q == 0) return x == q;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these bases are deterministic below 3.3e24
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t y = pow_mod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist((1ULL << 61) + 1, (1ULL << 62) - 1);
  while (true) {
    std::uint64_t c = dist(rng) | 1ULL;
    if (is_prime(c)) return c;
  }
}

std::uint64_t to_mod(std::int64_t v, std::uint64_t p) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p;
  std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;  // |v| without overflow
  m %= p;
  return m == 0 ? 0 : p - m;
}

std::int64_t lift_symmetric(std::uint64_t v, std::uint64_t p) {
  if (v > p / 2) return -static_cast<std::int64_t>(p - v);
  return static_cast<std::int64_t>(v);
}

ModularEliminator::ModularEliminator(int cols, std::uint64_t p)
    : cols_(cols), p_(p), pivot_of_col_(cols, -1), acc_(cols, 0), touched_(cols, 0) {}

bool ModularEliminator::add_row(const SparseRow& row) {
  std::vector<std::pair<int, std::uint64_t>> r;
  r.reserve(row.size());
  for (auto [c, v] : row) {
    std::uint64_t m = to_mod(v, p_);
    if (m) r.emplace_back(c, m);
  }
  return add_row_mod(r);
}

bool ModularEliminator::add_row_mod(const std::vector<std::pair<int, std::uint64_t>>& row) {
  std::vector<int> touched;
  std::priority_queue<int, std::vector<int>, std::greater<>> heap;
  std::vector<char> queued(pivot_cols_.size(), 0);

  auto touch = [&](int c) {
    if (!touched_[c]) {
      touched_[c] = 1;
      touched.push_back(c);
    }
    const int k = pivot_of_col_[c];
    if (k >= 0 && !queued[k]) {
      queued[k] = 1;
      heap.push(k);
    }
  };

  for (auto [c, v] : row) {
    if (c < 0 || c >= cols_) throw std::out_of_range("column index out of range");
    acc_[c] = (acc_[c] + v) % p_;
    touch(c);
  }
  while (!heap.empty()) {
    const int k = heap.top();
    heap.pop();
    const std::uint64_t f = acc_[pivot_cols_[k]];
    if (f == 0) continue;
    const std::uint64_t neg = p_ - f;
    for (auto [c, v] : rows_[k]) {
      acc_[c] = (acc_[c] + mul_mod(neg, v, p_)) % p_;
      touch(c);
    }
  }

  std::sort(touched.begin(), touched.end());
  std::vector<std::pair<int, std::uint64_t>> reduced;
  for (int c : touched) {
    if (acc_[c]) reduced.emplace_back(c, acc_[c]);
    acc_[c] = 0;
    touched_[c] = 0;
  }
  if (reduced.empty()) return false;

  const std::uint64_t inv = inv_mod(reduced.front().second, p_);
  for (auto& [c, v] : reduced) v = mul_mod(v, inv, p_);
  const int lead = reduced.front().first;
  pivot_of_col_[lead] = static_cast<int>(rows_.size());
  pivot_cols_.push_back(lead);
  rows_.push_back(std::move(reduced));
  fully_reduced_ = false;
  return true;
}

void ModularEliminator::reduce_fully() {
  if (fully_reduced_) return;
  std::vector<int> touched;
  for (int k = static_cast<int>(rows_.size()) - 1; k >= 0; --k) {
    const int own = pivot_cols_[k];
    bool needs = false;
    for (auto [c, v] : rows_[k])
      if (c != own && pivot_of_col_[c] >= 0) {
        needs = true;
        break;
      }
    if (!needs) continue;
    touched.clear();
    for (auto [c, v] : rows_[k]) {
      acc_[c] = v;
      touched_[c] = 1;
      touched.push_back(c);
    }
    // rows created later are already reduced, so one sweep suffices
    const auto original = rows_[k];
    for (auto [c, v0] : original) {
      if (c == own || pivot_of_col_[c] < 0) continue;
      const std::uint64_t f = acc_[c];
      if (f == 0) continue;
      const std::uint64_t neg = p_ - f;
      for (auto [c2, v] : rows_[pivot_of_col_[c]]) {
        acc_[c2] = (acc_[c2] + mul_mod(neg, v, p_)) % p_;
        if (!touched_[c2]) {
          touched_[c2] = 1;
          touched.push_back(c2);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<std::pair<int, std::uint64_t>> out;
    for (int c : touched) {
      if (acc_[c]) out.emplace_back(c, acc_[c]);
      acc_[c] = 0;
      touched_[c] = 0;
    }
    rows_[k] = std::move(out);
  }
  fully_reduced_ = true;
}

std::vector<int> ModularEliminator::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < cols_; ++c)
    if (pivot_of_col_[c] < 0) out.push_back(c);
  return out;
}

// ------------------------------------------------------------------- exact

int exact_rank(const SparseMatrix& m) {
  const int cols = m.cols;
  std::vector<int> pivot_of_col(cols, -1);
  std::vector<int> pivot_cols;
  std::vector<std::vector<std::pair<int, Integer>>> pivots;
  std::vector<Integer> acc(cols);
  std::vector<char> touched_flag(cols, 0);

  for (const auto& row : m.rows) {
    std::vector<int> touched;
    std::priority_queue<int, std::vector<int>, std::greater<>> heap;
    std::vector<char> queued(pivots.size(), 0);
    auto touch = [&](int c) {
      if (!touched_flag[c]) {
        touched_flag[c] = 1;
        touched.push_back(c);
      }
      const int k = pivot_of_col[c];
      if (k >= 0 && !queued[k]) {
        queued[k] = 1;
        heap.push(k);
      }
    };
    for (auto [c, v] : row) {
      acc[c] += v;
      touch(c);
    }
    Integer g, a, b;
    while (!heap.empty()) {
      const int k = heap.top();
      heap.pop();
      const int pc = pivot_cols[k];
      if (acc[pc] == 0) continue;
      const Integer& lead = pivots[k].front().second;
      g = gcd(lead, acc[pc]);
      a = lead / g;     // scales the accumulator
      b = acc[pc] / g;  // scales the pivot row
      if (a != 1)
        for (int c : touched) acc[c] *= a;
      for (const auto& [c, v] : pivots[k]) {
        acc[c] -= b * v;
        touch(c);
      }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<std::pair<int, Integer>> reduced;
    for (int c : touched) {
      if (acc[c] != 0) reduced.emplace_back(c, acc[c]);
      acc[c] = 0;
      touched_flag[c] = 0;
    }
    if (reduced.empty()) continue;
    Integer content = 0;
    for (const auto& [c, v] : reduced) content = gcd(content, v);
    if (reduced.front().second < 0) content = -content;
    for (auto& [c, v] : reduced) v /= content;
    pivot_of_col[reduced.front().first] = static_cast<int>(pivots.size());
    pivot_cols.push_back(reduced.front().first);
    pivots.push_back(std::move(reduced));
  }
  return static_cast<int>(pivots.size());
}

namespace {

int modular_rank(const SparseMatrix& m, std::uint64_t p) {
  ModularEliminator e(m.cols, p);
  for (const auto& r : m.rows) e.add_row(r);
  return e.rank();
}

}  // namespace

RankReport rank(const SparseMatrix& m, const RankOptions& opt) {
  RankReport rep;
  const int dim = std::max(static_cast<int>(m.rows.size()), m.cols);
  if (dim <= opt.exact_limit) {
    rep.backend = "exact";
    rep.rank = exact_rank(m);
    return rep;
  }
  rep.backend = "modular";
  std::mt19937_64 rng(opt.seed);
  const std::uint64_t p1 = random_prime(rng);
  rep.primes.push_back(p1);
  rep.rank = modular_rank(m, p1);
  if (!opt.prime_check) return rep;

  std::uint64_t p2 = random_prime(rng);
  while (p2 == p1) p2 = random_prime(rng);
  rep.primes.push_back(p2);
  const int r2 = modular_rank(m, p2);
  if (r2 != rep.rank) {
    rep.confirmed = false;
    rep.detail = "ranks differ between primes: " + std::to_string(rep.rank) + " vs " + std::to_string(r2);
    rep.rank = std::max(rep.rank, r2);
  }

  // exact rank of a random column minor must match its modular rank
  std::vector<int> cols(m.cols);
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(cols.begin(), cols.end(), rng);
  cols.resize(std::min(200, m.cols));
  std::vector<int> remap(m.cols, -1);
  std::sort(cols.begin(), cols.end());
  for (std::size_t i = 0; i < cols.size(); ++i) remap[cols[i]] = static_cast<int>(i);
  SparseMatrix minor;
  minor.cols = static_cast<int>(cols.size());
  for (const auto& r : m.rows) {
    SparseRow nr;
    for (auto [c, v] : r)
      if (remap[c] >= 0) nr.emplace_back(remap[c], v);
    if (!nr.empty()) minor.rows.push_back(std::move(nr));
  }
  const int exact_minor = exact_rank(minor);
  const int mod_minor = modular_rank(minor, p1);
  if (exact_minor != mod_minor) {
    rep.confirmed = false;
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += "minor rank mismatch: exact " + std::to_string(exact_minor) + " vs modular " + std::to_string(mod_minor);
  }
  return rep;
}

// ---------------------------------------------------------- dense rational

std::vector<int> row_reduce(DenseMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rational_rank(DenseMatrix m) { return static_cast<int>(row_reduce(m).size()); }

DenseMatrix inverse(DenseMatrix m) {
  const std::size_t k = m.size();
  if (k == 0) return m;
  for (std::size_t i = 0; i < k; ++i) {
    if (m[i].size() != k) throw std::invalid_argument("inverse of a non-square matrix");
    m[i].resize(2 * k, 0);
    m[i][k + i] = 1;
  }
  auto piv = row_reduce(m);
  if (piv.size() < k || piv[k - 1] != static_cast<int>(k - 1)) throw std::domain_error("singular matrix");
  DenseMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) out[i].assign(m[i].begin() + k, m[i].end());
  return out;
}

}  // namespace wl::linalg
