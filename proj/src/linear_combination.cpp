#include "weyl_lanke/linear_combination.hpp"

namespace wl {

std::string format_coefficient(const Rational& c, bool first) {
  std::string out;
  if (sgn(c) < 0)
    out = "−";
  else if (!first)
    out = "+";
  Rational mag = abs(c);
  out += mag.get_str();
  out += "·";
  return out;
}

}  // namespace wl
