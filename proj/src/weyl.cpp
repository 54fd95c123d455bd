#include "weyl_lanke/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace wl::weyl {

namespace {

Integer binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<int> stripped(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Checks that x has profile alpha, allowing trailing degree-0 factors on either side.
void check_profile(const std::vector<int>& profile, const std::vector<int>& alpha, const char* who) {
  if (stripped(profile) != stripped(alpha))
    throw std::invalid_argument(std::string(who) + ": tensor profile does not match the tableau weight");
}

int count(const std::vector<int>& row, int letter) {
  return letter >= 1 && letter <= static_cast<int>(row.size()) ? row[letter - 1] : 0;
}

}  // namespace

// --------------------------------------------------------------- vectors

std::vector<Rational> WeylVector::dense() const {
  std::vector<Rational> out;
  for (const auto& t : comb::enumerate_sst(shape, weight)) out.push_back(coords.coefficient(t));
  return out;
}

std::string WeylVector::to_string() const {
  return format_combination(coords, [](const Tableau& t) { return t.to_string(); });
}

WeylVector basis_vector(const Tableau& u) {
  return WeylVector{u.shape(), u.weight(), LinearCombination<Tableau>(u)};
}

// ------------------------------------------------------------ phi and psi

LinearCombination<DividedTensor> phi(const Tableau& s, const DividedTensor& x) {
  const std::vector<int> alpha = s.weight();
  check_profile(x.profile(), alpha, "phi");
  const int rows = s.row_count();
  const int letters = static_cast<int>(alpha.size());

  LinearCombination<DividedTensor> out;
  std::vector<std::vector<int>> acc(rows);
  auto rec = [&](auto&& self, int j, const Integer& coef) -> void {
    if (j == letters) {
      DividedTensor t;
      for (const auto& r : acc) t.factors.emplace_back(r);
      out.add(t, Rational(coef));
      return;
    }
    std::vector<int> degrees(rows);
    for (int i = 0; i < rows; ++i) degrees[i] = s.count(i, j + 1);
    for (const auto& [pieces, c] : dp_comultiply(x.factors[j], degrees)) {
      Integer k = coef;
      auto saved = acc;
      for (int i = 0; i < rows; ++i) {
        const auto& e = pieces.factors[i].exps;
        auto& r = acc[i];
        if (r.size() < e.size()) r.resize(e.size(), 0);
        for (std::size_t t = 0; t < e.size(); ++t) {
          if (e[t] && r[t]) k *= binom(r[t] + e[t], e[t]);
          r[t] += e[t];
        }
      }
      self(self, j + 1, k);
      acc = std::move(saved);
    }
  };
  rec(rec, 0, Integer(1));
  return out;
}

LinearCombination<DividedTensor> phi(const Tableau& s, const LinearCombination<DividedTensor>& x) {
  LinearCombination<DividedTensor> out;
  for (const auto& [t, c] : x) out.add_scaled(phi(s, t), c);
  return out;
}

LinearCombination<ExteriorTensor> psi(const Tableau& s, const ExteriorTensor& x) {
  const std::vector<int> alpha = s.weight();
  check_profile(x.profile(), alpha, "psi");
  const int rows = s.row_count();
  const int letters = static_cast<int>(alpha.size());

  LinearCombination<ExteriorTensor> out;
  std::vector<ExteriorMonomial> acc(rows);
  auto rec = [&](auto&& self, int j, int sign) -> void {
    if (j == letters) {
      out.add(ExteriorTensor{acc}, sign);
      return;
    }
    std::vector<int> degrees(rows);
    for (int i = 0; i < rows; ++i) degrees[i] = s.count(i, j + 1);
    for (const auto& [pieces, c] : ext_comultiply(x.factors[j], degrees)) {
      int sg = sign * (c > 0 ? 1 : -1);
      auto saved = acc;
      bool zero = false;
      for (int i = 0; i < rows && !zero; ++i) {
        auto [ps, m] = ext_product_signed(acc[i], pieces.factors[i]);
        if (ps == 0) zero = true;
        sg *= ps;
        acc[i] = std::move(m);
      }
      if (!zero) self(self, j + 1, sg);
      acc = std::move(saved);
    }
  };
  rec(rec, 0, 1);
  return out;
}

LinearCombination<ExteriorTensor> psi(const Tableau& s, const LinearCombination<ExteriorTensor>& x) {
  LinearCombination<ExteriorTensor> out;
  for (const auto& [t, c] : x) out.add_scaled(psi(s, t), c);
  return out;
}

int transport_sign(const Tableau& s) {
  long total = 0;
  const int rows = s.row_count(), letters = s.max_letter();
  for (int i = 0; i < rows; ++i)
    for (int j = 1; j <= letters; ++j)
      for (int k = 0; k < i; ++k)
        for (int l = j + 1; l <= letters; ++l) total += static_cast<long>(s.count(i, j)) * s.count(k, l);
  return total % 2 ? -1 : 1;
}

// --------------------------------------------------------------- oracle

LinearCombination<ExteriorTensor> co_schur(const DividedTensor& x) {
  const int rows = static_cast<int>(x.factors.size());
  std::vector<int> lengths;
  for (const auto& f : x.factors) lengths.push_back(f.degree());
  for (int i = 1; i < rows; ++i)
    if (lengths[i] > lengths[i - 1]) throw std::invalid_argument("co_schur: row lengths must weakly decrease");
  const int ncols = rows ? lengths[0] : 0;

  std::vector<std::vector<int>> words_sorted(rows);
  for (int i = 0; i < rows; ++i)
    for (std::size_t t = 0; t < x.factors[i].exps.size(); ++t)
      for (int k = 0; k < x.factors[i].exps[t]; ++k) words_sorted[i].push_back(static_cast<int>(t) + 1);

  LinearCombination<ExteriorTensor> out;
  std::vector<std::vector<int>> columns(ncols);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == rows) {
      int inv = 0;
      ExteriorTensor t;
      for (const auto& col : columns) {
        for (std::size_t a = 0; a < col.size(); ++a)
          for (std::size_t b = a + 1; b < col.size(); ++b)
            if (col[a] > col[b]) ++inv;
        std::vector<int> sorted = col;
        std::sort(sorted.begin(), sorted.end());
        ExteriorMonomial m;
        m.indices = std::move(sorted);
        t.factors.push_back(std::move(m));
      }
      out.add(t, inv % 2 ? -1 : 1);
      return;
    }
    std::vector<int> word = words_sorted[i];
    do {
      bool clash = false;
      for (int c = 0; c < lengths[i] && !clash; ++c)
        clash = std::find(columns[c].begin(), columns[c].end(), word[c]) != columns[c].end();
      if (clash) continue;
      for (int c = 0; c < lengths[i]; ++c) columns[c].push_back(word[c]);
      self(self, i + 1);
      for (int c = 0; c < lengths[i]; ++c) columns[c].pop_back();
    } while (std::next_permutation(word.begin(), word.end()));
  };
  rec(rec, 0);
  return out;
}

LinearCombination<ExteriorTensor> co_schur(const LinearCombination<DividedTensor>& x) {
  LinearCombination<ExteriorTensor> out;
  for (const auto& [t, c] : x) out.add_scaled(co_schur(t), c);
  return out;
}

Realization::Realization(Partition mu, std::vector<int> weight)
    : shape_(std::move(mu)), weight_(stripped(std::move(weight))) {
  basis_ = comb::enumerate_sst(shape_, weight_);
  std::map<ExteriorTensor, int> index;
  std::vector<ExteriorTensor> all_keys;
  for (const auto& u : basis_) {
    images_.push_back(co_schur(tableau_tensor(u)));
    for (const auto& [t, c] : images_.back())
      if (index.emplace(t, static_cast<int>(all_keys.size())).second) all_keys.push_back(t);
  }
  const std::size_t k = basis_.size();
  if (k == 0) return;
  linalg::DenseMatrix m(k, std::vector<Rational>(all_keys.size()));
  for (std::size_t u = 0; u < k; ++u)
    for (const auto& [t, c] : images_[u]) m[u][index.at(t)] = c;
  auto reduced = m;
  const auto piv = linalg::row_reduce(reduced);
  if (piv.size() != k) throw std::logic_error("semistandard images are linearly dependent");
  linalg::DenseMatrix block(k, std::vector<Rational>(k));
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t p = 0; p < k; ++p) block[u][p] = m[u][piv[p]];
  for (int p : piv) keys_.push_back(all_keys[p]);
  inverse_ = linalg::inverse(std::move(block));
}

std::vector<Rational> Realization::solve(const LinearCombination<ExteriorTensor>& image) const {
  const std::size_t k = basis_.size();
  std::vector<Rational> r(k), c(k);
  for (std::size_t p = 0; p < k; ++p) r[p] = image.coefficient(keys_[p]);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t p = 0; p < k; ++p)
      if (r[p] != 0) c[u] += r[p] * inverse_[p][u];
  LinearCombination<ExteriorTensor> check;
  for (std::size_t u = 0; u < k; ++u) check.add_scaled(images_[u], c[u]);
  if (!(check == image)) throw std::logic_error("vector is not in the span of the semistandard images");
  return c;
}

std::shared_ptr<const Realization> realization(const Partition& mu, const std::vector<int>& weight) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, std::vector<int>>, std::shared_ptr<const Realization>> cache;
  auto key = std::make_pair(mu, stripped(weight));
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const Realization>(mu, key.second);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(built)).first->second;
}

WeylVector oracle_coords(const Partition& mu, const LinearCombination<DividedTensor>& x) {
  WeylVector out{mu, {}, {}};
  if (x.empty()) return out;
  out.weight = weight_of(x.begin()->first);
  for (const auto& [t, c] : x) {
    check_profile(t.profile(), mu.parts(), "oracle_coords");
    if (weight_of(t) != out.weight) throw std::invalid_argument("oracle_coords: terms of different weights");
  }
  auto real = realization(mu, out.weight);
  const auto c = real->solve(co_schur(x));
  for (std::size_t u = 0; u < c.size(); ++u) out.coords.add(real->basis()[u], c[u]);
  return out;
}

WeylVector oracle_coords(const Partition& mu, const Tableau& s) {
  return oracle_coords(mu, LinearCombination<DividedTensor>(tableau_tensor(s)));
}

// --------------------------------------------------------- straightening

LinearCombination<Tableau> straighten_pair(const Partition& nu, const Tableau& s, int v) {
  if (nu.length() > 2 || s.row_count() > 2 || s.shape() != nu)
    throw std::invalid_argument("straighten_pair: tableau must fill the two-row shape");
  std::vector<int> a = s.row_count() > 0 ? s.rows()[0] : std::vector<int>{};
  std::vector<int> b = s.row_count() > 1 ? s.rows()[1] : std::vector<int>{};
  const int bv = count(b, v);
  if (bv == 0) throw std::invalid_argument("straighten_pair: letter " + std::to_string(v) + " is absent from row 2");
  LinearCombination<Tableau> out;
  if (count(a, v) + bv > nu[0]) return out;

  const int letters = std::max<int>({static_cast<int>(a.size()), static_cast<int>(b.size()), v});
  a.resize(letters, 0);
  b.resize(letters, 0);
  std::vector<int> k(letters, 0);
  const int sign = bv % 2 ? -1 : 1;

  auto rec = [&](auto&& self, int t, int left, const Integer& coef) -> void {
    if (t == letters) {
      if (left) return;
      std::vector<int> r1 = a, r2 = b;
      r1[v - 1] += bv;
      r2[v - 1] = 0;
      for (int q = 0; q < letters; ++q) {
        r1[q] -= k[q];
        r2[q] += k[q];
      }
      out.add(Tableau({r1, r2}), Rational(coef * sign));
      return;
    }
    if (t == v - 1) {
      self(self, t + 1, left, coef);
      return;
    }
    for (int c = std::min(a[t], left); c >= 0; --c) {
      k[t] = c;
      self(self, t + 1, left - c, c ? Integer(coef * binom(b[t] + c, c)) : coef);
    }
    k[t] = 0;
  };
  rec(rec, 0, bv, Integer(1));
  return out;
}

LinearCombination<Tableau> raise_rows(const Partition& mu, const Tableau& s, int j, int v) {
  if (j < 0 || j + 1 >= s.row_count()) throw std::invalid_argument("raise_rows: row pair out of range");
  const Partition nu({mu[j], mu[j + 1]});
  const Tableau pair({s.rows()[j], s.rows()[j + 1]});
  LinearCombination<Tableau> out;
  for (const auto& [t, c] : straighten_pair(nu, pair, v)) {
    auto rows = s.rows();
    rows[j] = t.rows()[0];
    rows[j + 1] = t.row_count() > 1 ? t.rows()[1] : comb::RowCounts{};
    out.add(Tableau(std::move(rows)), c);
  }
  return out;
}

namespace {

bool has_letter_below(const Tableau& s, int row, int v) {
  for (int t = 1; t < v; ++t)
    if (s.count(row, t)) return true;
  return false;
}

}  // namespace

LinearCombination<Tableau> raise_letter(const Partition& mu, const LinearCombination<Tableau>& x, int v) {
  LinearCombination<Tableau> done;
  std::map<Tableau, Rational> pending(x.terms().begin(), x.terms().end());
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Tableau& s = node.key();
    int pick = -1;
    for (int j = s.row_count() - 2; j >= 0 && pick < 0; --j)
      if (s.count(j + 1, v) && !has_letter_below(s, j, v) && !has_letter_below(s, j + 1, v)) pick = j;
    if (pick < 0) {
      done.add(s, node.mapped());
      continue;
    }
    for (const auto& [t, c] : raise_rows(mu, s, pick, v)) {
      Rational add = c * node.mapped();
      auto [it, ins] = pending.try_emplace(t, add);
      if (!ins) {
        it->second += add;
        if (it->second == 0) pending.erase(it);
      }
    }
  }
  return done;
}

bool overflows(const Partition& mu, const Tableau& s) {
  const int letters = s.max_letter();
  for (int v = 1; v <= letters; ++v) {
    int below = 0;
    for (int j = s.row_count() - 1; j >= 0; --j) {
      below += s.count(j, v);
      if (below > mu[j]) return true;
    }
  }
  return false;
}

namespace {

// Smallest letter at which rows (j, j+1) break column strictness, or 0.
int first_violation(const Tableau& s, int j) {
  const int letters = s.max_letter();
  int below = 0, above_strict = 0;
  for (int t = 1; t <= letters; ++t) {
    below += s.count(j + 1, t);
    if (below > above_strict) return t;
    above_strict += s.count(j, t);
  }
  return 0;
}

}  // namespace

WeylVector straighten(const Partition& mu, const LinearCombination<Tableau>& x, StraightenStats* stats) {
  StraightenStats local;
  StraightenStats& st = stats ? *stats : local;
  WeylVector out{mu, {}, {}};
  if (!x.empty()) out.weight = x.begin()->first.weight();

  LinearCombination<DividedTensor> stalled;
  std::map<Tableau, Rational> pending;
  for (const auto& [t, c] : x) {
    if (t.shape() != mu) throw std::invalid_argument("straighten: tableau shape differs from " + mu.to_string());
    if (t.weight() != out.weight) throw std::invalid_argument("straighten: terms of different weights");
    pending.emplace(t, c);
  }
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Tableau& s = node.key();
    const Rational& coef = node.mapped();
    if (overflows(mu, s)) {
      ++st.zero_terms;
      continue;
    }
    if (s.is_semistandard()) {
      out.coords.add(s, coef);
      continue;
    }
    int best_j = -1, best_v = 0;
    for (int j = s.row_count() - 2; j >= 0; --j) {
      const int v = first_violation(s, j);
      if (v == 0 || has_letter_below(s, j, v) || has_letter_below(s, j + 1, v)) continue;
      if (best_j < 0 || v < best_v) {
        best_j = j;
        best_v = v;
      }
    }
    if (best_j < 0) {
      ++st.fallback_terms;
      stalled.add(tableau_tensor(s), coef);
      continue;
    }
    ++st.moves;
    for (const auto& [t, c] : raise_rows(mu, s, best_j, best_v)) {
      Rational add = c * coef;
      auto [it, ins] = pending.try_emplace(t, add);
      if (!ins) {
        it->second += add;
        if (it->second == 0) pending.erase(it);
      }
    }
  }
  if (!stalled.empty()) out.coords += oracle_coords(mu, stalled).coords;
  return out;
}

WeylVector straighten(const Partition& mu, const Tableau& s, StraightenStats* stats) {
  return straighten(mu, LinearCombination<Tableau>(s), stats);
}

WeylVector straighten(const Partition& mu, const LinearCombination<DividedTensor>& x, StraightenStats* stats) {
  LinearCombination<Tableau> t;
  for (const auto& [d, c] : x) t.add(tensor_tableau(d), c);
  auto out = straighten(mu, t, stats);
  if (x.empty()) out.weight = {};
  return out;
}

WeylVector pi_U(const Tableau& u, const LinearCombination<DividedTensor>& x) {
  return oracle_coords(u.shape(), phi(u, x));
}

WeylVector pi_U(const Tableau& u, const DividedTensor& x) {
  return pi_U(u, LinearCombination<DividedTensor>(x));
}

}  // namespace wl::weyl
