#include "weyl_lanke/tensor_algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wl {

namespace {

void strip(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Integer binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

int inversions(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv;
}

// Every vector beta <= bound (entrywise) with |beta| = total.
void sub_vectors(const std::vector<int>& bound, int total, std::vector<int>& cur, std::size_t pos,
                 std::vector<std::vector<int>>& out, int suffix_cap) {
  if (pos == bound.size()) {
    if (total == 0) out.push_back(cur);
    return;
  }
  const int rest_cap = suffix_cap - bound[pos];
  for (int c = std::min(bound[pos], total); c >= 0; --c) {
    if (total - c > rest_cap) break;
    cur[pos] = c;
    sub_vectors(bound, total - c, cur, pos + 1, out, rest_cap);
  }
  cur[pos] = 0;
}

}  // namespace

// ------------------------------------------------------------- monomials

DividedMonomial::DividedMonomial(std::vector<int> e) : exps(std::move(e)) {
  for (int x : exps)
    if (x < 0) throw std::invalid_argument("negative divided-power exponent");
  strip(exps);
}

int DividedMonomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

std::string DividedMonomial::to_string() const { return comb::format_row(exps); }

DividedMonomial DividedMonomial::parse(std::string_view text) { return DividedMonomial(comb::parse_row(text)); }

ExteriorMonomial::ExteriorMonomial(std::vector<int> idx) : indices(std::move(idx)) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1) throw std::invalid_argument("exterior index must be positive");
    if (i > 0 && indices[i] <= indices[i - 1])
      throw std::invalid_argument("exterior indices must be strictly increasing");
  }
}

bool ExteriorMonomial::contains(int letter) const {
  return std::binary_search(indices.begin(), indices.end(), letter);
}

std::string ExteriorMonomial::to_string() const {
  if (indices.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(indices[i]);
  }
  return out;
}

ExteriorMonomial ExteriorMonomial::parse(std::string_view text) {
  auto counts = comb::parse_row(text);
  std::vector<int> idx;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] > 1) throw std::invalid_argument("repeated letter in exterior monomial");
    if (counts[j] == 1) idx.push_back(static_cast<int>(j) + 1);
  }
  return ExteriorMonomial(std::move(idx));
}

std::vector<std::string_view> split_tensor_text(std::string_view text) {
  static constexpr std::string_view kOtimes = "⊗";
  std::vector<std::string_view> pieces;
  std::size_t start = 0, i = 0;
  while (i <= text.size()) {
    std::size_t sep_len = 0;
    if (i == text.size())
      sep_len = 0;
    else if (text[i] == '|')
      sep_len = 1;
    else if (text.substr(i, kOtimes.size()) == kOtimes)
      sep_len = kOtimes.size();
    else {
      ++i;
      continue;
    }
    pieces.push_back(text.substr(start, i - start));
    if (i == text.size()) break;
    i += sep_len;
    start = i;
  }
  return pieces;
}

std::vector<int> weight_of(const DividedTensor& t) {
  std::vector<int> w;
  for (const auto& f : t.factors) {
    if (w.size() < f.exps.size()) w.resize(f.exps.size(), 0);
    for (std::size_t j = 0; j < f.exps.size(); ++j) w[j] += f.exps[j];
  }
  strip(w);
  return w;
}

std::vector<int> weight_of(const ExteriorTensor& t) {
  std::vector<int> w;
  for (const auto& f : t.factors)
    for (int i : f.indices) {
      if (static_cast<int>(w.size()) < i) w.resize(i, 0);
      ++w[i - 1];
    }
  strip(w);
  return w;
}

// ------------------------------------------------------------ divided powers

LinearCombination<DividedMonomial> dp_product(const DividedMonomial& a, const DividedMonomial& b) {
  std::vector<int> e(std::max(a.exps.size(), b.exps.size()), 0);
  Integer coef = 1;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const int x = k < a.exps.size() ? a.exps[k] : 0;
    const int y = k < b.exps.size() ? b.exps[k] : 0;
    e[k] = x + y;
    if (x && y) coef *= binom(x + y, y);
  }
  return LinearCombination<DividedMonomial>(DividedMonomial(std::move(e)), Rational(coef));
}

LinearCombination<DividedTensor> dp_comultiply(const DividedMonomial& a, const std::vector<int>& degrees) {
  LinearCombination<DividedTensor> out;
  if (std::accumulate(degrees.begin(), degrees.end(), 0) != a.degree() ||
      std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 0; }))
    throw std::invalid_argument("dp_comultiply: degrees do not split the monomial");
  if (degrees.empty()) return out;

  DividedTensor cur;
  auto rec = [&](auto&& self, std::size_t f, const std::vector<int>& remaining) -> void {
    if (f + 1 == degrees.size()) {
      cur.factors.emplace_back(remaining);
      out.add(cur, 1);
      cur.factors.pop_back();
      return;
    }
    std::vector<std::vector<int>> choices;
    std::vector<int> buf(remaining.size(), 0);
    const int cap = std::accumulate(remaining.begin(), remaining.end(), 0);
    sub_vectors(remaining, degrees[f], buf, 0, choices, cap);
    for (const auto& beta : choices) {
      std::vector<int> rest(remaining.size());
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] = remaining[k] - beta[k];
      cur.factors.emplace_back(beta);
      self(self, f + 1, rest);
      cur.factors.pop_back();
    }
  };
  rec(rec, 0, a.exps);
  return out;
}

LinearCombination<DividedMonomial> dp_product(const LinearCombination<DividedMonomial>& a,
                                              const LinearCombination<DividedMonomial>& b) {
  LinearCombination<DividedMonomial> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(dp_product(x, y), cx * cy);
  return out;
}

// --------------------------------------------------------------- exterior

std::pair<int, ExteriorMonomial> ext_product_signed(const ExteriorMonomial& a, const ExteriorMonomial& b) {
  std::vector<int> merged;
  merged.reserve(a.indices.size() + b.indices.size());
  // sign: each pair (x in a, y in b) with x > y is one inversion
  int inv = 0;
  std::size_t i = 0, j = 0;
  while (i < a.indices.size() || j < b.indices.size()) {
    if (j == b.indices.size() || (i < a.indices.size() && a.indices[i] < b.indices[j])) {
      merged.push_back(a.indices[i++]);
    } else if (i == a.indices.size() || b.indices[j] < a.indices[i]) {
      inv += static_cast<int>(a.indices.size() - i);
      merged.push_back(b.indices[j++]);
    } else {
      return {0, ExteriorMonomial()};
    }
  }
  ExteriorMonomial m;
  m.indices = std::move(merged);
  return {inv % 2 ? -1 : 1, std::move(m)};
}

LinearCombination<ExteriorMonomial> ext_product(const ExteriorMonomial& a, const ExteriorMonomial& b) {
  auto [s, m] = ext_product_signed(a, b);
  LinearCombination<ExteriorMonomial> out;
  if (s != 0) out.add(m, s);
  return out;
}

LinearCombination<ExteriorMonomial> ext_product(const LinearCombination<ExteriorMonomial>& a,
                                                const LinearCombination<ExteriorMonomial>& b) {
  LinearCombination<ExteriorMonomial> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      auto [s, m] = ext_product_signed(x, y);
      if (s != 0) out.add(m, cx * cy * s);
    }
  return out;
}

LinearCombination<ExteriorTensor> ext_comultiply(const ExteriorMonomial& a, const std::vector<int>& degrees) {
  LinearCombination<ExteriorTensor> out;
  if (std::accumulate(degrees.begin(), degrees.end(), 0) != a.degree() ||
      std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 0; }))
    throw std::invalid_argument("ext_comultiply: degrees do not split the monomial");
  if (degrees.empty()) return out;

  const int deg = a.degree();
  std::vector<int> block(deg, -1);
  // assign positions to blocks; each block takes its positions in increasing order
  auto rec = [&](auto&& self, std::size_t f) -> void {
    if (f == degrees.size()) {
      ExteriorTensor t;
      std::vector<int> order;
      for (std::size_t b = 0; b < degrees.size(); ++b) {
        ExteriorMonomial m;
        for (int p = 0; p < deg; ++p)
          if (block[p] == static_cast<int>(b)) {
            m.indices.push_back(a.indices[p]);
            order.push_back(p);
          }
        t.factors.push_back(std::move(m));
      }
      out.add(t, inversions(order) % 2 ? -1 : 1);
      return;
    }
    std::vector<int> free;
    for (int p = 0; p < deg; ++p)
      if (block[p] < 0) free.push_back(p);
    const int k = degrees[f];
    std::vector<bool> pick(free.size(), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      for (std::size_t q = 0; q < free.size(); ++q)
        if (pick[q]) block[free[q]] = static_cast<int>(f);
      self(self, f + 1);
      for (std::size_t q = 0; q < free.size(); ++q)
        if (pick[q]) block[free[q]] = -1;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  };
  rec(rec, 0);
  return out;
}

// ------------------------------------------------------------ enumerators

DividedTensor divided_generator(const std::vector<int>& profile) {
  DividedTensor t;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    std::vector<int> e(i + 1, 0);
    e[i] = profile[i];
    t.factors.emplace_back(std::move(e));
  }
  return t;
}

DividedTensor tableau_tensor(const comb::Tableau& s) {
  DividedTensor t;
  for (const auto& r : s.rows()) t.factors.emplace_back(r);
  return t;
}

comb::Tableau tensor_tableau(const DividedTensor& t) {
  std::vector<comb::RowCounts> rows;
  for (const auto& f : t.factors) rows.push_back(f.exps);
  return comb::Tableau(std::move(rows));
}

namespace {

// Nonnegative integer matrices with the given row and column sums; cap bounds each entry.
void contingency(const std::vector<int>& rows, const std::vector<int>& cols, int cap,
                 const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  const std::size_t R = rows.size(), C = cols.size();
  std::vector<std::vector<int>> m(R, std::vector<int>(C, 0));
  std::vector<int> col_left = cols;
  auto fill_row = [&](auto&& self, std::size_t i, std::size_t j, int left) -> void {
    if (i == R) {
      if (std::all_of(col_left.begin(), col_left.end(), [](int x) { return x == 0; })) emit(m);
      return;
    }
    if (j == C) {
      if (left == 0) self(self, i + 1, 0, i + 1 < R ? rows[i + 1] : 0);
      return;
    }
    int hi = std::min(left, col_left[j]);
    if (cap >= 0) hi = std::min(hi, cap);
    for (int c = hi; c >= 0; --c) {
      m[i][j] = c;
      col_left[j] -= c;
      self(self, i, j + 1, left - c);
      col_left[j] += c;
    }
    m[i][j] = 0;
  };
  if (std::accumulate(rows.begin(), rows.end(), 0) != std::accumulate(cols.begin(), cols.end(), 0)) return;
  fill_row(fill_row, 0, 0, R ? rows[0] : 0);
}

}  // namespace

std::vector<DividedTensor> divided_basis(const std::vector<int>& profile, const std::vector<int>& weight) {
  std::vector<DividedTensor> out;
  contingency(profile, weight, -1, [&](const std::vector<std::vector<int>>& m) {
    DividedTensor t;
    for (const auto& r : m) t.factors.emplace_back(r);
    out.push_back(std::move(t));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExteriorTensor> exterior_basis(const std::vector<int>& profile, const std::vector<int>& weight) {
  std::vector<ExteriorTensor> out;
  contingency(profile, weight, 1, [&](const std::vector<std::vector<int>>& m) {
    ExteriorTensor t;
    for (const auto& r : m) {
      ExteriorMonomial e;
      for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j]) e.indices.push_back(static_cast<int>(j) + 1);
      t.factors.push_back(std::move(e));
    }
    out.push_back(std::move(t));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string format(const LinearCombination<DividedTensor>& c) {
  return format_combination(c, [](const DividedTensor& t) { return t.to_string(); });
}

std::string format(const LinearCombination<ExteriorTensor>& c) {
  return format_combination(c, [](const ExteriorTensor& t) { return t.to_string(); });
}

}  // namespace wl
