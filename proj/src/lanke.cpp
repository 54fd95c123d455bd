#include "weyl_lanke/lanke.hpp"

#include "weyl_lanke/gamma_maps.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace wl::lanke {

namespace {

int alt(std::size_t i) { return i % 2 ? -1 : 1; }

int sort_sign(std::vector<int>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  std::sort(v.begin(), v.end());
  return inv % 2 ? -1 : 1;
}

std::vector<int> expected_sizes(WordKind kind, int n) {
  if (kind == WordKind::G1) return {n, n - 1, n - 1};
  return {n, n, n - 2};
}

std::uint64_t mask_of(const std::vector<int>& v) {
  std::uint64_t m = 0;
  for (int a : v) m |= std::uint64_t{1} << (a - 1);
  return m;
}

std::uint64_t key_of(WordKind kind, std::uint64_t a, std::uint64_t b) {
  return (kind == WordKind::G2 ? std::uint64_t{1} << 62 : 0) | (a << 31) | b;
}

std::vector<int> prepend(int a, const std::vector<int>& v) {
  std::vector<int> out;
  out.reserve(v.size() + 1);
  out.push_back(a);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<int> without(const std::vector<int>& v, std::size_t i) {
  std::vector<int> out = v;
  out.erase(out.begin() + static_cast<long>(i));
  return out;
}

using Emit = std::function<void(WordKind, const std::vector<int>&, const std::vector<int>&, const std::vector<int>&, int)>;

// Writes out the terms of one relation instance.
void emit_relation(Relation r, const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& z,
                   const Emit& emit) {
  const auto G1 = WordKind::G1, G2 = WordKind::G2;
  switch (r) {
    case Relation::R1:
      emit(G1, x, y, z, 1);
      for (std::size_t i = 0; i < x.size(); ++i) emit(G1, prepend(x[i], y), without(x, i), z, -alt(i));
      break;
    case Relation::R2:
      emit(G1, x, y, z, 1);
      emit(G1, x, z, y, -1);
      for (std::size_t i = 0; i < y.size(); ++i) emit(G2, x, prepend(y[i], z), without(y, i), -alt(i));
      break;
    case Relation::R3:
      emit(G2, x, y, z, 1);
      for (std::size_t i = 0; i < x.size(); ++i) emit(G1, y, prepend(x[i], z), without(x, i), alt(i));
      break;
    case Relation::R4:
      emit(G1, x, y, z, 1);
      emit(G1, x, z, y, -1);
      for (std::size_t i = 0; i < y.size(); ++i) {
        const auto yz = prepend(y[i], z);
        const auto rest = without(y, i);
        for (std::size_t j = 0; j < x.size(); ++j)
          emit(G1, yz, prepend(x[j], rest), without(x, j), alt(i) * alt(j));
      }
      break;
    case Relation::R5:
      for (std::size_t i = 0; i < y.size(); ++i) emit(G1, x, prepend(y[i], z), without(y, i), alt(i));
      for (std::size_t i = 0; i < x.size(); ++i) emit(G1, y, prepend(x[i], z), without(x, i), alt(i));
      break;
  }
}

bool needs_g2(Relation r) { return r == Relation::R2 || r == Relation::R3; }

bool three_block_nn(Relation r) { return r == Relation::R3 || r == Relation::R5; }

// Calls f(chosen, rest) for every k-subset of the increasing pool.
template <typename F>
void for_each_subset(const std::vector<int>& pool, int k, F&& f) {
  const int len = static_cast<int>(pool.size());
  if (k < 0 || k > len) return;
  std::vector<bool> pick(len, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> chosen, rest;
    for (int i = 0; i < len; ++i) (pick[i] ? chosen : rest).push_back(pool[i]);
    f(chosen, rest);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

std::vector<int> letters(int m) {
  std::vector<int> v(m);
  for (int i = 0; i < m; ++i) v[i] = i + 1;
  return v;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

// ------------------------------------------------------------------ words

std::string BracketWord::to_string() const {
  if (kind == WordKind::G1) {
    std::string s = "[[[" + join(first) + "]";
    if (!second.empty()) s += "," + join(second);
    s += "]";
    if (!rest.empty()) s += "," + join(rest);
    return s + "]";
  }
  std::string s = "[[" + join(first) + "],[" + join(second) + "]";
  if (!rest.empty()) s += "," + join(rest);
  return s + "]";
}

SignedWord normalize(WordKind kind, std::vector<int> first, std::vector<int> second, std::vector<int> rest) {
  const int n = static_cast<int>(first.size());
  if (n < 2) throw std::invalid_argument("bracket word: first block needs at least 2 letters");
  const auto sizes = expected_sizes(kind, n);
  if (static_cast<int>(second.size()) != sizes[1] || static_cast<int>(rest.size()) != sizes[2])
    throw std::invalid_argument("bracket word: block sizes do not match");
  const int m = 3 * n - 2;
  std::vector<bool> seen(m + 1, false);
  for (const auto* b : {&first, &second, &rest})
    for (int a : *b) {
      if (a < 1 || a > m || seen[a]) throw std::invalid_argument("bracket word: letters must be a permutation of 1.." + std::to_string(m));
      seen[a] = true;
    }
  SignedWord out;
  out.sign = sort_sign(first) * sort_sign(second) * sort_sign(rest);
  if (kind == WordKind::G2 && first.front() > second.front()) {
    std::swap(first, second);
    out.sign = -out.sign;
  }
  out.word = BracketWord{kind, std::move(first), std::move(second), std::move(rest)};
  return out;
}

SignedWord parse_word(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&]() -> SignedWord { throw std::invalid_argument("cannot parse bracket word '" + std::string(text) + "'"); };

  std::size_t pos = 0;
  auto read_list = [&](std::vector<int>& out) {
    // letters until ']' or '['; commas separate
    while (pos < s.size() && s[pos] != ']' && s[pos] != '[') {
      if (s[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(s[pos]))) fail();
      int v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
      out.push_back(v);
    }
  };
  auto expect = [&](char c) {
    if (pos >= s.size() || s[pos] != c) fail();
    ++pos;
  };

  std::vector<int> a, b, c;
  if (s.rfind("[[[", 0) == 0) {
    pos = 3;
    read_list(a);
    expect(']');
    read_list(b);
    expect(']');
    read_list(c);
    expect(']');
    if (pos != s.size()) fail();
    return normalize(WordKind::G1, a, b, c);
  }
  if (s.rfind("[[", 0) == 0) {
    pos = 2;
    read_list(a);
    expect(']');
    if (pos < s.size() && s[pos] == ',') ++pos;
    expect('[');
    read_list(b);
    expect(']');
    read_list(c);
    expect(']');
    if (pos != s.size()) fail();
    return normalize(WordKind::G2, a, b, c);
  }
  return fail();
}

std::vector<BracketWord> words(int n, WordKind kind) {
  const int m = 3 * n - 2;
  const auto sizes = expected_sizes(kind, n);
  std::vector<BracketWord> out;
  for_each_subset(letters(m), sizes[0], [&](const std::vector<int>& a, const std::vector<int>& rest) {
    for_each_subset(rest, sizes[1], [&](const std::vector<int>& b, const std::vector<int>& c) {
      if (kind == WordKind::G2 && a.front() > b.front()) return;
      out.push_back(BracketWord{kind, a, b, c});
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

// ----------------------------------------------------------------- index

WordIndex::WordIndex(int n, bool with_g2) : n_(n), with_g2_(with_g2) {
  if (n < 2) throw std::invalid_argument("bracket words need n >= 2");
  if (3 * n - 2 > 31) throw std::invalid_argument("too many letters");
  words_ = words(n, WordKind::G1);
  if (with_g2) {
    auto g2 = words(n, WordKind::G2);
    words_.insert(words_.end(), g2.begin(), g2.end());
  }
  cols_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i)
    cols_.emplace(key_of(words_[i].kind, mask_of(words_[i].first), mask_of(words_[i].second)), static_cast<int>(i));
}

int WordIndex::column(const BracketWord& w) const {
  auto it = cols_.find(key_of(w.kind, mask_of(w.first), mask_of(w.second)));
  if (it == cols_.end() || words_[it->second] != w) return -1;
  return it->second;
}

std::pair<int, int> WordIndex::locate(WordKind kind, const std::vector<int>& a, const std::vector<int>& b,
                                      const std::vector<int>& c) const {
  // sign from block sorts, plus the G2 swap
  auto inversions = [](const std::vector<int>& v) {
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (v[i] > v[j]) ++inv;
    return inv;
  };
  int inv = inversions(a) + inversions(b) + inversions(c);
  std::uint64_t ma = mask_of(a), mb = mask_of(b);
  if (kind == WordKind::G2 && (ma & (~ma + 1)) > (mb & (~mb + 1))) {
    std::swap(ma, mb);
    ++inv;
  }
  auto it = cols_.find(key_of(kind, ma, mb));
  if (it == cols_.end()) return {-1, 0};
  return {it->second, inv % 2 ? -1 : 1};
}

linalg::SparseRow WordIndex::row_of(const LinearCombination<BracketWord>& x) const {
  linalg::SparseRow row;
  for (const auto& [w, c] : x) {
    const int col = column(w);
    if (col < 0) throw std::invalid_argument("word " + w.to_string() + " is not in this space");
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw std::invalid_argument("row_of: non-integral coefficient");
    row.emplace_back(col, c.get_num().get_si());
  }
  std::sort(row.begin(), row.end());
  return row;
}

// ------------------------------------------------------------- relations

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::R1: return "R1";
    case Relation::R2: return "R2";
    case Relation::R3: return "R3";
    case Relation::R4: return "R4";
    case Relation::R5: return "R5";
  }
  return "?";
}

Presentation parse_presentation(std::string_view s) {
  std::string t(s);
  std::replace(t.begin(), t.end(), '_', '-');
  if (t == "full") return Presentation::full;
  if (t == "g1-r145") return Presentation::g1_r145;
  if (t == "g1-r14") return Presentation::g1_r14;
  throw std::invalid_argument("unknown presentation '" + std::string(s) + "' (full, g1-r145, g1-r14)");
}

std::string presentation_name(Presentation p) {
  switch (p) {
    case Presentation::full: return "full";
    case Presentation::g1_r145: return "g1-r145";
    case Presentation::g1_r14: return "g1-r14";
  }
  return "?";
}

std::vector<Relation> presentation_relations(Presentation p) {
  switch (p) {
    case Presentation::full: return {Relation::R1, Relation::R2, Relation::R3};
    case Presentation::g1_r145: return {Relation::R1, Relation::R4, Relation::R5};
    case Presentation::g1_r14: return {Relation::R1, Relation::R4};
  }
  return {};
}

LinearCombination<BracketWord> relation_element(Relation r, const std::vector<int>& x, const std::vector<int>& y,
                                                const std::vector<int>& z) {
  const int n = static_cast<int>(x.size());
  const bool nn = three_block_nn(r);
  if (n < 2 || static_cast<int>(y.size()) != (nn ? n : n - 1) || static_cast<int>(z.size()) != (nn ? n - 2 : n - 1))
    throw std::invalid_argument(relation_name(r) + ": block sizes do not match");
  LinearCombination<BracketWord> out;
  emit_relation(r, x, y, z,
                [&](WordKind k, const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c, int s) {
                  auto sw = normalize(k, a, b, c);
                  out.add(sw.word, s * sw.sign);
                });
  return out;
}

linalg::SparseMatrix relation_rows(const WordIndex& space, const std::vector<Relation>& which) {
  const int n = space.n();
  linalg::SparseMatrix mat;
  mat.cols = space.size();
  std::set<linalg::SparseRow> seen;
  std::map<int, std::int64_t> acc;

  auto add_instance = [&](Relation r, const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& z) {
    acc.clear();
    emit_relation(r, x, y, z,
                  [&](WordKind k, const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c, int s) {
                    auto [col, sign] = space.locate(k, a, b, c);
                    if (col < 0) throw std::logic_error("relation term outside the word space");
                    acc[col] += s * sign;
                  });
    linalg::SparseRow row;
    for (auto [c, v] : acc)
      if (v != 0) row.emplace_back(c, v);
    if (row.empty() || !seen.insert(row).second) return;
    mat.rows.push_back(std::move(row));
  };

  for (Relation r : which) {
    if (needs_g2(r) && !space.with_g2())
      throw std::invalid_argument(relation_name(r) + " involves G2 words, which this space does not contain");
    const int m = space.m();
    if (three_block_nn(r)) {
      for_each_subset(letters(m), n, [&](const std::vector<int>& x, const std::vector<int>& rest) {
        for_each_subset(rest, n, [&](const std::vector<int>& y, const std::vector<int>& z) {
          if (r == Relation::R5 && x.front() > y.front()) return;
          add_instance(r, x, y, z);
        });
      });
    } else {
      for_each_subset(letters(m), n, [&](const std::vector<int>& x, const std::vector<int>& rest) {
        for_each_subset(rest, n - 1, [&](const std::vector<int>& y, const std::vector<int>& z) { add_instance(r, x, y, z); });
      });
    }
  }
  return mat;
}

LieDimReport lie_dim(int n, Presentation p, const linalg::RankOptions& opt) {
  const WordIndex space(n, p == Presentation::full);
  const auto mat = relation_rows(space, presentation_relations(p));
  LieDimReport rep;
  rep.generators = space.size();
  rep.relation_rows = static_cast<int>(mat.rows.size());
  rep.rank = linalg::rank(mat, opt);
  rep.dim = rep.generators - rep.rank.rank;
  return rep;
}

int lie2_dim(int n) {
  if (n < 2) throw std::invalid_argument("lie2_dim needs n >= 2");
  const int m = 2 * n - 1;
  std::map<std::uint64_t, int> cols;
  for_each_subset(letters(m), n, [&](const std::vector<int>& x, const std::vector<int>&) {
    cols.emplace(mask_of(x), static_cast<int>(cols.size()));
  });
  linalg::SparseMatrix mat;
  mat.cols = static_cast<int>(cols.size());
  for_each_subset(letters(m), n, [&](const std::vector<int>& x, const std::vector<int>& y) {
    // [[x], y] = sum_i [x_1, .., [x_i, y], .., x_n] = sum_i (-1)^{i-1} [[x_i, y], x[i]]
    std::map<int, std::int64_t> acc;
    acc[cols.at(mask_of(x))] += 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto block = prepend(x[i], y);
      const int s = sort_sign(block);
      acc[cols.at(mask_of(block))] -= alt(i) * s;
    }
    linalg::SparseRow row;
    for (auto [c, v] : acc)
      if (v) row.emplace_back(c, v);
    if (!row.empty()) mat.rows.push_back(std::move(row));
  });
  return mat.cols - linalg::rank(mat).rank;
}

// ------------------------------------------------------------ characters

Quotient::Quotient(int n, std::uint64_t p) : index_(n, false), elim_(index_.size(), p) {
  const auto mat = relation_rows(index_, presentation_relations(Presentation::g1_r145));
  for (const auto& r : mat.rows) elim_.add_row(r);
  elim_.reduce_fully();
  basis_ = elim_.free_columns();
}

std::uint64_t Quotient::trace_mod(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != index_.m()) throw std::invalid_argument("trace: permutation has the wrong degree");
  const std::uint64_t p = prime();
  std::uint64_t tr = 0;
  auto act = [&](const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = perm[v[i] - 1];
    return out;
  };
  for (int b : basis_) {
    const auto& w = index_.word(b);
    auto [col, s] = index_.locate(WordKind::G1, act(w.first), act(w.second), act(w.rest));
    if (col < 0) throw std::logic_error("trace: permuted word left the space");
    if (!elim_.is_pivot(col)) {
      if (col == b) tr = (tr + (s > 0 ? 1 : p - 1)) % p;
      continue;
    }
    // e_col = -sum_{free f} R_col[f] e_f in the quotient
    const auto& row = elim_.pivot_row(col);
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(b, std::uint64_t{0}));
    if (it == row.end() || it->first != b) continue;
    const std::uint64_t v = it->second;
    tr = (tr + (s > 0 ? p - v : v)) % p;
  }
  return tr;
}

std::shared_ptr<const Quotient> quotient(int n, int prime_slot, std::uint64_t seed) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::uint64_t>, std::shared_ptr<const Quotient>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, prime_slot, seed}];
  if (!slot) {
    std::mt19937_64 rng(seed);
    std::uint64_t p = linalg::random_prime(rng);
    for (int i = 0; i < prime_slot; ++i) {
      std::uint64_t q = linalg::random_prime(rng);
      while (q == p) q = linalg::random_prime(rng);
      p = q;
    }
    slot = std::make_shared<const Quotient>(n, p);
  }
  return slot;
}

std::int64_t lie_character(int n, const comb::CycleType& c, const CharacterOptions& opt) {
  if (c.size() != 3 * n - 2) throw std::invalid_argument("class must be a partition of 3n-2");
  const auto perm = comb::class_representative(c);
  const auto q = quotient(n, 0, opt.seed);
  const std::int64_t t = q->trace(perm);
  if (opt.prime_check) {
    const auto q2 = quotient(n, 1, opt.seed);
    if (q2->dim() != q->dim() || q2->trace(perm) != t)
      throw std::runtime_error("character value differs between primes");
  }
  return t;
}

decomp::SpechtDecomposition specht_multiplicities(int n, const CharacterOptions& opt) {
  const int m = 3 * n - 2;
  const auto classes = comb::partitions_of(m);
  std::vector<std::int64_t> chi;
  for (const auto& c : classes) chi.push_back(lie_character(n, c, opt));
  decomp::SpechtDecomposition d;
  for (const auto& p : classes) {
    Rational sum = 0;
    for (std::size_t k = 0; k < classes.size(); ++k)
    {
      Rational term(Integer(chi[k]) * Integer(comb::mn_character(p, classes[k])), Integer(comb::centralizer_order(classes[k])));
      term.canonicalize();
      sum += term;
    }
    if (sum.get_den() != 1) throw std::logic_error("non-integral multiplicity for (" + p.to_string() + ")");
    if (sum < 0) throw std::logic_error("negative multiplicity for (" + p.to_string() + ")");
    if (sum > 0) d.entries.emplace_back(p, static_cast<int>(sum.get_num().get_si()));
  }
  return d;
}

// ----------------------------------------------------------------- bridge

LinearCombination<BracketWord> to_words(const LinearCombination<ExteriorTensor>& x) {
  LinearCombination<BracketWord> out;
  for (const auto& [t, c] : x) {
    if (t.factors.size() != 3) throw std::invalid_argument("to_words: expected three tensor factors");
    out.add(BracketWord{WordKind::G1, t.factors[0].indices, t.factors[1].indices, t.factors[2].indices}, c);
  }
  return out;
}

BridgeReport schur_bridge(int n) {
  const int m = 3 * n - 2;
  BridgeReport rep;
  rep.n = n;
  const WordIndex space(n, false);
  const std::vector<int> ones(m, 1);
  const auto lam_basis = exterior_basis({n, n - 1, n - 1}, ones);
  const auto nu_basis = exterior_basis({n, n, n - 2}, ones);
  rep.codomain_dim = static_cast<int>(lam_basis.size());
  if (rep.codomain_dim != space.size()) throw std::logic_error("bridge: basis sizes differ");

  linalg::SparseMatrix mat;
  mat.cols = space.size();
  auto check = [&](const LinearCombination<ExteriorTensor>& img, Relation r, const ExteriorTensor& w) {
    const auto lhs = to_words(img);
    const auto rhs = relation_element(r, w.factors[0].indices, w.factors[1].indices, w.factors[2].indices);
    ++rep.rows_checked;
    if (lhs == rhs)
      ++rep.rows_matched;
    else if (rep.first_mismatch.empty())
      rep.first_mismatch = relation_name(r) + " at " + w.to_string();
    mat.rows.push_back(space.row_of(lhs));
  };
  for (const auto& w : lam_basis) {
    check(gamma::omega_gamma1(w), Relation::R1, w);
    check(gamma::omega_gamma2(w), Relation::R4, w);
  }
  for (const auto& u : nu_basis) check(gamma::omega_gamma3(u), Relation::R5, u);

  rep.image_rank = linalg::rank(mat).rank;
  rep.cokernel_dim = rep.codomain_dim - rep.image_rank;
  rep.lie_dim = lie_dim(n, Presentation::g1_r145).dim;
  return rep;
}

}  // namespace wl::lanke
