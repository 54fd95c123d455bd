// One line per acceptance criterion; exits nonzero if any fails.

#include "weyl_lanke/verification.hpp"

#include <iostream>

int main() {
  const auto results = wl::verify::run_suite({});
  int failed = 0;
  for (const auto& r : results) {
    std::cout << wl::verify::summary_line(r, true) << '\n';
    if (!r.ok()) {
      ++failed;
      if (const auto* a = r.first_failure()) std::cout << "       " << a->name << ": " << a->detail << '\n';
    }
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
  return failed ? 1 : 0;
}
