#pragma once

#include "weyl_lanke/combinatorics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wl::verify {

struct Assertion {
  std::string name;
  bool ok = true;
  std::string detail;  // offending values on failure, a short summary otherwise
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<int> ns;
  std::vector<Assertion> assertions;
  std::string skipped;  // reason, when nothing was run
  double seconds = 0;

  bool ok() const;
  const Assertion* first_failure() const;
};

struct Options {
  std::uint64_t seed = 20240611;
  bool prime_check = true;
  int random_tableaux = 200;
};

constexpr int criterion_count = 12;

std::string criterion_title(int id);
/// n values each criterion covers by default; empty for the n-independent ones (7, 12).
std::vector<int> default_range(int id);
/// Largest n a criterion accepts on request.
int max_n(int id);

/// Runs one criterion at the given n values; an empty list means the default range.
CriterionResult run_criterion(int id, const std::vector<int>& ns, const Options& opt = {});

/// All twelve criteria. With a single n, the n-dependent criteria run at that n only.
std::vector<CriterionResult> run_suite(const std::vector<int>& ns, const Options& opt = {});

/// "PASS   3  cokernel of gamma1 is the Pieri list (n=2,3,4)  0.41s"
std::string summary_line(const CriterionResult& r, bool with_time = false);

/// Standard Young tableaux counted by removing corners; independent of the hook formula.
std::int64_t syt_count(const comb::Partition& p);

}  // namespace wl::verify
