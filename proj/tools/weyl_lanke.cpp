// weyl-lanke: batch front end for the Weyl module and LAnKe computations.

#include "weyl_lanke/decomposition.hpp"
#include "weyl_lanke/gamma_maps.hpp"
#include "weyl_lanke/lanke.hpp"
#include "weyl_lanke/verification.hpp"
#include "weyl_lanke/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace wl;

constexpr const char* schema = "weyl-lanke/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  int n = 0;
  std::string maps;
  std::string shape;
  std::string tableau;
  std::string tensor;
  std::string presentation = "full";
  std::string cycle_class;
  std::string format = "text";
  bool prime_check = false;
  std::uint64_t seed = 20240611;
};

int need_n(const Flags& f) {
  if (f.n < 2) throw UsageError("--n must be an integer >= 2");
  return f.n;
}

std::vector<gamma::MapKind> parse_maps(const std::string& text) {
  std::vector<gamma::MapKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(gamma::parse_kind(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--maps: ") + e.what());
    }
  }
  if (out.empty()) throw UsageError("--maps needs at least one of gamma1, gamma2, gamma3");
  return out;
}

template <typename F>
auto parse_flag(const char* flag, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

json parts_json(const comb::Partition& p) { return json(p.parts()); }

json weyl_json(const weyl::WeylVector& v) {
  json terms = json::array();
  for (const auto& [t, c] : v.coords) terms.push_back({{"tableau", t.to_string()}, {"coef", c.get_str()}});
  return terms;
}

template <typename T>
json combination_json(const LinearCombination<T>& x) {
  json terms = json::array();
  for (const auto& [t, c] : x) terms.push_back({{"tensor", t.to_string()}, {"coef", c.get_str()}});
  return terms;
}

void emit(const Flags& f, const json& j, const std::string& text) {
  if (f.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

// --------------------------------------------------------------- commands

int cmd_straighten(const Flags& f) {
  if (f.tableau.empty()) throw UsageError("--tableau is required");
  const auto s = parse_flag("--tableau", [&] { return comb::Tableau::parse(f.tableau); });
  const auto mu = f.shape.empty() ? s.shape() : parse_flag("--shape", [&] { return comb::Partition::parse(f.shape); });
  if (mu != s.shape()) throw UsageError("--shape (" + mu.to_string() + ") does not match the tableau shape (" + s.shape().to_string() + ")");
  if (mu.length() > 3) throw UsageError("--shape: at most three rows");
  weyl::StraightenStats stats;
  const auto v = weyl::straighten(mu, s, &stats);
  json j{{"schema", schema},
         {"command", "straighten"},
         {"shape", parts_json(mu)},
         {"tableau", s.to_string()},
         {"coords", weyl_json(v)},
         {"stats", {{"moves", stats.moves}, {"zero_terms", stats.zero_terms}, {"fallback_terms", stats.fallback_terms}}}};
  emit(f, j, v.to_string());
  return 0;
}

int cmd_phi(const Flags& f) {
  if (f.tableau.empty()) throw UsageError("--tableau is required");
  const auto s = parse_flag("--tableau", [&] { return comb::Tableau::parse(f.tableau); });
  const auto x = f.tensor.empty() ? divided_generator(s.weight())
                                  : parse_flag("--tensor", [&] { return DividedTensor::parse(f.tensor); });
  const auto img = parse_flag("--tensor", [&] { return weyl::phi(s, x); });
  json j{{"schema", schema}, {"command", "phi"}, {"tableau", s.to_string()}, {"input", x.to_string()}, {"image", combination_json(img)}};
  emit(f, j, format(img));
  return 0;
}

int cmd_gamma(const Flags& f) {
  const int n = need_n(f);
  const auto maps = parse_maps(f.maps.empty() ? "gamma1,gamma2,gamma3" : f.maps);
  json arr = json::array();
  std::string text;
  for (auto k : maps) {
    if (k == gamma::MapKind::g) throw UsageError("--maps: g is not a tableau map; use gamma1, gamma2, gamma3");
    const auto g = gamma::make_map(k, n);
    const auto x = f.tensor.empty() ? g.generator() : parse_flag("--tensor", [&] { return DividedTensor::parse(f.tensor); });
    const auto img = parse_flag("--tensor", [&] { return gamma::gamma_image(g, x); });
    arr.push_back({{"map", g.name()}, {"input", x.to_string()}, {"image", combination_json(img)}});
    text += (text.empty() ? "" : "\n") + g.name() + "(" + x.to_string() + ") = " + format(img);
  }
  emit(f, json{{"schema", schema}, {"command", "gamma"}, {"n", n}, {"images", arr}}, text);
  return 0;
}

int cmd_decompose(const Flags& f) {
  const int n = need_n(f);
  const auto maps = parse_maps(f.maps.empty() ? "gamma1,gamma2" : f.maps);
  for (auto k : maps)
    if (k == gamma::MapKind::g) throw UsageError("--maps: g is not a tableau map");
  const auto d = decomp::decompose_cokernel(n, maps);
  json j{{"schema", schema}, {"n", n}};
  j["maps"] = json::array();
  for (auto k : maps) j["maps"].push_back(gamma::kind_name(k));
  j["cokernel"] = json::array();
  for (const auto& [p, m] : d.entries) j["cokernel"].push_back({{"partition", parts_json(p)}, {"mult", m}});
  emit(f, j, d.to_string());
  return 0;
}

linalg::RankOptions rank_options(const Flags& f) {
  linalg::RankOptions o;
  o.prime_check = f.prime_check;
  o.seed = f.seed;
  return o;
}

int cmd_lie_dim(const Flags& f) {
  const int n = need_n(f);
  const auto p = parse_flag("--presentation", [&] { return lanke::parse_presentation(f.presentation); });
  const auto rep = lanke::lie_dim(n, p, rank_options(f));
  json j{{"schema", schema},
         {"command", "lie-dim"},
         {"n", n},
         {"presentation", lanke::presentation_name(p)},
         {"dim", rep.dim},
         {"generators", rep.generators},
         {"relation_rows", rep.relation_rows},
         {"rank", rep.rank.rank},
         {"backend", rep.rank.backend},
         {"confirmed", rep.rank.confirmed}};
  std::ostringstream os;
  os << rep.dim << "  (" << lanke::presentation_name(p) << ": " << rep.generators << " generators, " << rep.relation_rows
     << " relation rows, rank " << rep.rank.rank << ", " << rep.rank.backend;
  if (rep.rank.backend == "modular") os << (rep.rank.primes.size() > 1 ? ", two primes" : ", one prime");
  os << ")";
  if (!rep.rank.confirmed) os << "\nwarning: " << rep.rank.detail;
  emit(f, j, os.str());
  return rep.rank.confirmed ? 0 : 1;
}

int cmd_lie_character(const Flags& f) {
  const int n = need_n(f);
  if (f.cycle_class.empty()) throw UsageError("--class is required");
  const auto c = parse_flag("--class", [&] { return comb::Partition::parse(f.cycle_class); });
  if (c.size() != 3 * n - 2) throw UsageError("--class must be a partition of " + std::to_string(3 * n - 2));
  const auto v = lanke::lie_character(n, c, {f.prime_check, f.seed});
  emit(f, json{{"schema", schema}, {"command", "lie-character"}, {"n", n}, {"class", parts_json(c)}, {"value", v}},
       std::to_string(v));
  return 0;
}

int cmd_specht(const Flags& f) {
  const int n = need_n(f);
  const auto d = lanke::specht_multiplicities(n, {f.prime_check, f.seed});
  json j{{"schema", schema}, {"command", "specht"}, {"n", n}};
  j["multiplicities"] = json::array();
  for (const auto& [p, m] : d.entries) j["multiplicities"].push_back({{"partition", parts_json(p)}, {"mult", m}});
  emit(f, j, d.to_string());
  return 0;
}

int cmd_bridge(const Flags& f) {
  const int n = need_n(f);
  if (n > 3) throw UsageError("--n: the bridge is built for n = 2, 3");
  const auto b = lanke::schur_bridge(n);
  json j{{"schema", schema},     {"command", "bridge"},          {"n", n},
         {"codomain_dim", b.codomain_dim}, {"image_rank", b.image_rank}, {"cokernel_dim", b.cokernel_dim},
         {"lie_dim", b.lie_dim}, {"rows_checked", b.rows_checked}, {"rows_matched", b.rows_matched},
         {"ok", b.ok()}};
  std::ostringstream os;
  os << "coker " << b.cokernel_dim << " (codomain " << b.codomain_dim << ", rank " << b.image_rank << "), lie_dim "
     << b.lie_dim << ", rows matched " << b.rows_matched << "/" << b.rows_checked;
  if (!b.first_mismatch.empty()) os << ", first mismatch " << b.first_mismatch;
  emit(f, j, os.str());
  return b.ok() ? 0 : 1;
}

json results_json(const std::vector<verify::CriterionResult>& rs) {
  json arr = json::array();
  for (const auto& r : rs) {
    json a = json::array();
    for (const auto& x : r.assertions) a.push_back({{"name", x.name}, {"ok", x.ok}, {"detail", x.detail}});
    arr.push_back({{"id", r.id},
                   {"title", r.title},
                   {"n", r.ns},
                   {"status", r.skipped.empty() ? (r.ok() ? "pass" : "fail") : "skip"},
                   {"skipped", r.skipped},
                   {"assertions", a}});
  }
  return arr;
}

int report(const Flags& f, const char* command, const std::vector<verify::CriterionResult>& rs, bool list_assertions) {
  bool ok = true;
  std::string text;
  for (const auto& r : rs) {
    if (!r.ok()) ok = false;
    text += verify::summary_line(r) + "\n";
    if (list_assertions)
      for (const auto& a : r.assertions)
        text += std::string("      ") + (a.ok ? "ok    " : "FAIL  ") + a.name + (a.detail.empty() ? "" : "  [" + a.detail + "]") + "\n";
  }
  for (const auto& r : rs)
    if (const auto* a = r.first_failure()) {
      text += "first failure: criterion " + std::to_string(r.id) + ": " + a->name + ": " + a->detail + "\n";
      break;
    }
  text += ok ? "all checks passed" : "verification failed";
  // timings vary between runs, so they stay out of the JSON report
  emit(f, json{{"schema", schema}, {"command", command}, {"ok", ok}, {"criteria", results_json(rs)}}, text);
  return ok ? 0 : 1;
}

verify::Options verify_options(const Flags& f) {
  verify::Options o;
  o.seed = f.seed;
  o.prime_check = true;
  return o;
}

int cmd_verify(const Flags& f) {
  const int n = need_n(f);
  return report(f, "verify", verify::run_suite({n}, verify_options(f)), false);
}

int cmd_selftest(const Flags& f) {
  return report(f, "selftest", {verify::run_criterion(12, {}, verify_options(f))}, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Weyl modules, gamma maps and the free LAnKe", "weyl-lanke"};
  app.require_subcommand(1);
  Flags f;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_n = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--n", f.n, "n >= 2");
    if (required) o->required();
  };

  auto* straighten = app.add_subcommand("straighten", "coordinates of pi_mu(e^S) in the semistandard basis");
  straighten->add_option("--shape", f.shape, "partition, e.g. 3,2 (defaults to the tableau shape)");
  straighten->add_option("--tableau", f.tableau, "rows separated by '/', e.g. \"1 2 3 / 1 3\"")->required();
  add_format(straighten);

  auto* phi = app.add_subcommand("phi", "apply phi_S to a divided power tensor");
  phi->add_option("--tableau", f.tableau, "the tableau S")->required();
  phi->add_option("--tensor", f.tensor, "tensor of profile weight(S), e.g. \"1 2^2 | 1 2^5 | 3\" (default e^weight)");
  add_format(phi);

  auto* gamma = app.add_subcommand("gamma", "images of gamma maps");
  add_n(gamma);
  gamma->add_option("--maps", f.maps, "comma list of gamma1, gamma2, gamma3");
  gamma->add_option("--tensor", f.tensor, "input tensor (default: the cyclic generator)");
  add_format(gamma);

  auto* decompose = app.add_subcommand("decompose", "Weyl module decomposition of the cokernel of a sum of gamma maps");
  add_n(decompose);
  decompose->add_option("--maps", f.maps, "comma list of gamma1, gamma2, gamma3");
  add_format(decompose);

  auto* lie_dim = app.add_subcommand("lie-dim", "dimension of the multilinear three-bracket LAnKe component");
  add_n(lie_dim);
  lie_dim->add_option("--presentation", f.presentation, "full, g1-r145 or g1-r14");
  lie_dim->add_flag("--prime-check", f.prime_check, "confirm modular ranks with a second prime");
  lie_dim->add_option("--seed", f.seed, "prime selection seed");
  add_format(lie_dim);

  auto* lie_char = app.add_subcommand("lie-character", "character of S_{3n-2} on the multilinear component");
  add_n(lie_char);
  lie_char->add_option("--class", f.cycle_class, "cycle type, e.g. 2,1,1,1")->required();
  lie_char->add_flag("--prime-check", f.prime_check, "recompute with a second prime");
  lie_char->add_option("--seed", f.seed, "prime selection seed");
  add_format(lie_char);

  auto* specht = app.add_subcommand("specht", "Specht module multiplicities of the multilinear component");
  add_n(specht);
  specht->add_flag("--prime-check", f.prime_check, "recompute traces with a second prime");
  specht->add_option("--seed", f.seed, "prime selection seed");
  add_format(specht);

  auto* bridge = app.add_subcommand("bridge", "exterior relation maps against the LAnKe presentation");
  add_n(bridge);
  add_format(bridge);

  auto* verify_cmd = app.add_subcommand("verify", "acceptance checks at one n");
  add_n(verify_cmd);
  verify_cmd->add_option("--seed", f.seed, "seed for randomized checks");
  verify_cmd->add_flag("--prime-check", f.prime_check, "accepted for symmetry; verification always uses two primes");
  add_format(verify_cmd);

  auto* selftest = app.add_subcommand("selftest", "property suites");
  selftest->add_option("--seed", f.seed, "seed for randomized checks");
  add_format(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*straighten) return cmd_straighten(f);
    if (*phi) return cmd_phi(f);
    if (*gamma) return cmd_gamma(f);
    if (*decompose) return cmd_decompose(f);
    if (*lie_dim) return cmd_lie_dim(f);
    if (*lie_char) return cmd_lie_character(f);
    if (*specht) return cmd_specht(f);
    if (*bridge) return cmd_bridge(f);
    if (*verify_cmd) return cmd_verify(f);
    if (*selftest) return cmd_selftest(f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
