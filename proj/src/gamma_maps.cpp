#include "weyl_lanke/gamma_maps.hpp"

#include "weyl_lanke/linalg.hpp"
#include "weyl_lanke/weyl.hpp"

#include <map>
#include <stdexcept>

namespace wl::gamma {

std::string kind_name(MapKind k) {
  switch (k) {
    case MapKind::gamma1: return "gamma1";
    case MapKind::gamma2: return "gamma2";
    case MapKind::gamma3: return "gamma3";
    case MapKind::g: return "g";
  }
  return "?";
}

MapKind parse_kind(std::string_view s) {
  if (s == "gamma1") return MapKind::gamma1;
  if (s == "gamma2") return MapKind::gamma2;
  if (s == "gamma3") return MapKind::gamma3;
  if (s == "g") return MapKind::g;
  throw std::invalid_argument("unknown map '" + std::string(s) + "'");
}

Partition lambda_shape(int n) { return Partition({n, n - 1, n - 1}); }
Partition mu_shape(int n) { return Partition({n + 1, n - 1, n - 2}); }
Partition nu_shape(int n) { return Partition({n, n, n - 2}); }
int epsilon(int n) { return n % 2 ? -1 : 1; }

namespace {

// Row with the given letter multiplicities, letters 1..3.
comb::RowCounts row(int ones, int twos, int threes) { return {ones, twos, threes}; }

}  // namespace

GammaMap make_map(MapKind kind, int n) {
  if (n < 2) throw std::invalid_argument("maps are defined for n >= 2");
  GammaMap g;
  g.kind = kind;
  g.n = n;
  const int e = epsilon(n);
  switch (kind) {
    case MapKind::gamma1:
    case MapKind::gamma2: {
      g.domain = g.codomain = {n, n - 1, n - 1};
      const Tableau s1({row(n, 0, 0), row(0, n - 1, 0), row(0, 0, n - 1)});
      g.terms.push_back({1, s1});
      if (kind == MapKind::gamma1) {
        g.terms.push_back({e, Tableau({row(1, n - 1, 0), row(n - 1, 0, 0), row(0, 0, n - 1)})});
      } else {
        g.terms.push_back({e, Tableau({row(n, 0, 0), row(0, 0, n - 1), row(0, n - 1, 0)})});
        g.terms.push_back({e, Tableau({row(0, 1, n - 1), row(1, n - 2, 0), row(n - 1, 0, 0)})});
      }
      break;
    }
    case MapKind::gamma3:
      g.domain = {n, n, n - 2};
      g.codomain = {n, n - 1, n - 1};
      g.terms.push_back({1, Tableau({row(n, 0, 0), row(0, 1, n - 2), row(0, n - 1, 0)})});
      g.terms.push_back({e, Tableau({row(0, n, 0), row(1, 0, n - 2), row(n - 1, 0, 0)})});
      break;
    case MapKind::g:
      throw std::invalid_argument("the g map is not a sum of tableau maps");
  }
  return g;
}

LinearCombination<DividedTensor> gamma_image(const GammaMap& g, const DividedTensor& x) {
  LinearCombination<DividedTensor> out;
  for (const auto& t : g.terms) out.add_scaled(weyl::phi(t.tableau, x), t.sign);
  return out;
}

LinearCombination<DividedTensor> gamma_image(const GammaMap& g, const LinearCombination<DividedTensor>& x) {
  LinearCombination<DividedTensor> out;
  for (const auto& [t, c] : x) out.add_scaled(gamma_image(g, t), c);
  return out;
}

// -------------------------------------------------------------- the g map

LinearCombination<ExteriorTensor> g_image(int n, const ExteriorTensor& x) {
  if (x.factors.size() != 2 || x.factors[0].degree() != n || x.factors[1].degree() != n - 1)
    throw std::invalid_argument("g_image: expected a tensor in Λ^n ⊗ Λ^(n-1)");
  LinearCombination<ExteriorTensor> out(x);
  const auto& y = x.factors[1];
  for (const auto& [pieces, c] : ext_comultiply(x.factors[0], {1, n - 1})) {
    auto [s, m] = ext_product_signed(pieces.factors[0], y);
    if (s == 0) continue;
    out.add(ExteriorTensor{{m, pieces.factors[1]}}, -c * s);
  }
  return out;
}

int g_cokernel_dim(int n, int letters) {
  // every subset pair, indexed globally
  std::vector<ExteriorTensor> basis;
  auto subsets = [&](int k) {
    std::vector<ExteriorMonomial> out;
    std::vector<bool> pick(letters, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      ExteriorMonomial m;
      for (int i = 0; i < letters; ++i)
        if (pick[i]) m.indices.push_back(i + 1);
      out.push_back(std::move(m));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
  };
  for (const auto& a : subsets(n))
    for (const auto& b : subsets(n - 1)) basis.push_back(ExteriorTensor{{a, b}});
  std::map<ExteriorTensor, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

  linalg::SparseMatrix m;
  m.cols = static_cast<int>(basis.size());
  for (const auto& b : basis) {
    linalg::SparseRow r;
    for (const auto& [t, c] : g_image(n, b)) r.emplace_back(index.at(t), c.get_num().get_si());
    std::sort(r.begin(), r.end());
    m.rows.push_back(std::move(r));
  }
  return m.cols - linalg::exact_rank(m);
}

// ---------------------------------------------------- exterior transports

LinearCombination<ExteriorTensor> transported_image(const GammaMap& g, const ExteriorTensor& w) {
  LinearCombination<ExteriorTensor> out;
  for (const auto& t : g.terms) out.add_scaled(weyl::psi(t.tableau, w), t.sign * weyl::transport_sign(t.tableau));
  return out;
}

namespace {

ExteriorMonomial single(int letter) {
  ExteriorMonomial m;
  m.indices = {letter};
  return m;
}

ExteriorMonomial drop(const ExteriorMonomial& x, std::size_t i) {
  ExteriorMonomial m = x;
  m.indices.erase(m.indices.begin() + static_cast<long>(i));
  return m;
}

int alt(std::size_t i) { return i % 2 ? -1 : 1; }  // (-1)^{i-1} for 1-based i = index + 1

void check(const ExteriorTensor& w, std::vector<int> profile, const char* who) {
  if (w.profile() != profile) throw std::invalid_argument(std::string(who) + ": tensor has the wrong profile");
}

}  // namespace

LinearCombination<ExteriorTensor> omega_gamma1(const ExteriorTensor& w) {
  const int n = w.factors.empty() ? 0 : w.factors[0].degree();
  check(w, {n, n - 1, n - 1}, "omega_gamma1");
  const auto& x = w.factors[0];
  const auto& y = w.factors[1];
  const auto& z = w.factors[2];
  LinearCombination<ExteriorTensor> out(w);
  for (std::size_t i = 0; i < x.indices.size(); ++i) {
    auto [s, xy] = ext_product_signed(single(x.indices[i]), y);
    if (s == 0) continue;
    out.add(ExteriorTensor{{xy, drop(x, i), z}}, -alt(i) * s);
  }
  return out;
}

LinearCombination<ExteriorTensor> omega_gamma2(const ExteriorTensor& w) {
  const int n = w.factors.empty() ? 0 : w.factors[0].degree();
  check(w, {n, n - 1, n - 1}, "omega_gamma2");
  const auto& x = w.factors[0];
  const auto& y = w.factors[1];
  const auto& z = w.factors[2];
  LinearCombination<ExteriorTensor> out(w);
  out.add(ExteriorTensor{{x, z, y}}, -1);
  for (std::size_t i = 0; i < y.indices.size(); ++i) {
    auto [s1, yz] = ext_product_signed(single(y.indices[i]), z);
    if (s1 == 0) continue;
    const auto yi = drop(y, i);
    for (std::size_t j = 0; j < x.indices.size(); ++j) {
      auto [s2, xy] = ext_product_signed(single(x.indices[j]), yi);
      if (s2 == 0) continue;
      out.add(ExteriorTensor{{yz, xy, drop(x, j)}}, alt(i) * alt(j) * s1 * s2);
    }
  }
  return out;
}

LinearCombination<ExteriorTensor> omega_gamma3(const ExteriorTensor& u) {
  const int n = u.factors.empty() ? 0 : u.factors[0].degree();
  check(u, {n, n, n - 2}, "omega_gamma3");
  const auto& x = u.factors[0];
  const auto& y = u.factors[1];
  const auto& z = u.factors[2];
  LinearCombination<ExteriorTensor> out;
  for (std::size_t i = 0; i < y.indices.size(); ++i) {
    auto [s, yz] = ext_product_signed(single(y.indices[i]), z);
    if (s) out.add(ExteriorTensor{{x, yz, drop(y, i)}}, alt(i) * s);
  }
  for (std::size_t i = 0; i < x.indices.size(); ++i) {
    auto [s, xz] = ext_product_signed(single(x.indices[i]), z);
    if (s) out.add(ExteriorTensor{{y, xz, drop(x, i)}}, alt(i) * s);
  }
  return out;
}

LinearCombination<ExteriorTensor> omega_image(MapKind kind, const ExteriorTensor& w) {
  switch (kind) {
    case MapKind::gamma1: return omega_gamma1(w);
    case MapKind::gamma2: return omega_gamma2(w);
    case MapKind::gamma3: return omega_gamma3(w);
    case MapKind::g: break;
  }
  throw std::invalid_argument("omega_image: no closed form for g");
}

}  // namespace wl::gamma
