#include "weyl_lanke/decomposition.hpp"

#include <stdexcept>

namespace wl::decomp {

namespace {

Integer binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

int sign_pow(int e) { return e % 2 ? -1 : 1; }

}  // namespace

HomSpace hom_space(const Partition& shape, const std::vector<int>& weight) {
  return HomSpace{shape, weight, comb::enumerate_sst(shape, weight)};
}

Generator make_generator(const gamma::GammaMap& g) {
  Generator gen;
  gen.name = g.name();
  gen.weight = g.domain;
  while (!gen.weight.empty() && gen.weight.back() == 0) gen.weight.pop_back();
  gen.image = gamma_image(g, g.generator());
  for (const auto& [t, c] : gen.image)
    if (t.profile() != g.codomain) throw std::logic_error("generator image has the wrong profile");
  return gen;
}

std::vector<Generator> generators(int n, const std::vector<gamma::MapKind>& maps) {
  std::vector<Generator> out;
  for (auto k : maps) out.push_back(make_generator(gamma::make_map(k, n)));
  return out;
}

std::vector<Rational> composed_coords(const Tableau& u, const Generator& gen) {
  const auto v = weyl::pi_U(u, gen.image);
  std::vector<Rational> out;
  for (const auto& t : comb::enumerate_sst(u.shape(), gen.weight)) out.push_back(v.coefficient(t));
  return out;
}

linalg::DenseMatrix restriction_matrix(int n, const Partition& mu, const std::vector<Generator>& gens) {
  const auto hom = hom_space(mu, gamma::lambda_shape(n).parts());
  linalg::DenseMatrix m;
  for (const auto& u : hom.basis) {
    std::vector<Rational> row;
    for (const auto& g : gens) {
      auto part = composed_coords(u, g);
      row.insert(row.end(), part.begin(), part.end());
    }
    m.push_back(std::move(row));
  }
  return m;
}

int restriction_rank(int n, const Partition& mu, const std::vector<Generator>& gens) {
  return linalg::rational_rank(restriction_matrix(n, mu, gens));
}

int cokernel_multiplicity(int n, const Partition& mu, const std::vector<Generator>& gens) {
  return static_cast<int>(comb::kostka(mu, gamma::lambda_shape(n).parts())) - restriction_rank(n, mu, gens);
}

std::string SpechtDecomposition::to_string() const {
  if (entries.empty()) return "0";
  std::string out;
  for (const auto& [p, m] : entries) {
    if (!out.empty()) out += ' ';
    out += "(" + p.to_string() + "):" + std::to_string(m);
  }
  return out;
}

std::vector<Partition> scan_domain(int n) {
  const Partition lambda = gamma::lambda_shape(n);
  std::vector<Partition> out;
  for (const auto& p : comb::partitions_of(3 * n - 2, 3))
    if (p.dominates(lambda)) out.push_back(p);
  return out;
}

SpechtDecomposition decompose_cokernel(int n, const std::vector<gamma::MapKind>& maps) {
  if (n < 2) throw std::invalid_argument("decompose_cokernel needs n >= 2");
  if (maps.empty()) throw std::invalid_argument("decompose_cokernel needs at least one map");
  const auto gens = generators(n, maps);
  SpechtDecomposition d;
  for (const auto& mu : scan_domain(n)) {
    const int mult = cokernel_multiplicity(n, mu, gens);
    if (mult > 0) d.entries.emplace_back(mu, mult);
  }
  return d;
}

bool check_image_inclusion(int n) {
  using gamma::MapKind;
  const auto base = generators(n, {MapKind::gamma1, MapKind::gamma2});
  auto all = base;
  all.push_back(make_generator(gamma::make_map(MapKind::gamma3, n)));
  for (const auto& mu : scan_domain(n))
    if (restriction_rank(n, mu, base) != restriction_rank(n, mu, all)) return false;
  return true;
}

// ---------------------------------------------------- Pieri closed forms

std::vector<Tableau> pieri_family(const comb::PieriConstituent& pc) {
  const int n = pc.n;
  std::vector<Tableau> out;
  for (int i = 0; i <= pc.c1; ++i)
    out.emplace_back(std::vector<comb::RowCounts>{{n, i, pc.c1 - i}, {0, n - 1 - i, pc.c2 + i}, {0, 0, pc.c3}});
  return out;
}

std::vector<Rational> predicted_gamma1_row(const comb::PieriConstituent& pc, int i) {
  std::vector<Rational> row(pc.c1 + 1);
  row[i] += 1;
  const int s = sign_pow(i + 1) * (i + 1);
  for (int t = 0; t <= pc.c1 - i; ++t) row[i + t] += Rational(s * binom(pc.c2 + i + t, t));
  return row;
}

std::vector<Rational> predicted_gamma2_row(const comb::PieriConstituent& pc) {
  const int c = pc.c();
  std::vector<Rational> row(pc.c1 + 1);
  if (c == 0) throw std::invalid_argument("predicted_gamma2_row: lambda itself is excluded");
  if (pc.c1 >= 1) {
    row[0] += 1;
    row[pc.c1] += sign_pow(c + 1);
    const int k = sign_pow(pc.c1) * (1 + pc.c2);
    row[1] += k;
    row[0] += k * c;
  } else {
    row[0] = 1 + sign_pow(pc.c2 + 1) + (1 + pc.c2) * pc.c2;
  }
  return row;
}

}  // namespace wl::decomp
