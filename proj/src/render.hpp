#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tgw/rational.hpp"

namespace tgw::detail {

// Joins (coefficient, monomial) pairs as `a + (3/2)*m - m2`. An empty monomial
// string denotes the unit.
inline std::string render_sum(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coef, mono] : terms) {
    const bool negative = sgn(coef) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(coef);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else if (mag.get_den() == 1) {
      out += mag.get_str() + "*" + mono;
    } else {
      out += "(" + mag.get_str() + ")*" + mono;
    }
  }
  return out;
}

inline std::string power(const std::string& base, long e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace tgw::detail
