#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "cfrac/algebra.hpp"
#include "cfrac/serialize.hpp"

namespace cfrac::test {

inline ExactElement ex(const std::string& text, Algebra a) { return parse_element(text, a, Backend::Exact).exact(); }
inline FloatElement fl(const std::string& text, Algebra a) {
  return parse_element(text, a, Backend::Float).as_float();
}

// Float error identities on the unit ball carry an absolute floor near eps.
inline bool within_float_floor(double lhs, double rhs) {
  return std::fabs(lhs - rhs) <= 1e-9 * rhs + 64 * std::numeric_limits<double>::epsilon();
}

}  // namespace cfrac::test
