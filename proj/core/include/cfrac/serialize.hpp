#pragma once

#include <string>
#include <string_view>

#include "cfrac/algebra.hpp"

namespace cfrac {

// "H:1,0,-1/2,3" for exact elements; float coefficients always carry a
// '.' or an exponent so the backend survives a round trip.
std::string serialize(const ExactElement& x);
std::string serialize(const FloatElement& x);
std::string serialize(const SurdElement& x);
std::string serialize(const AlgebraElement& x);

// Inverse of serialize.  The backend is float if any coefficient is written
// as a float, exact otherwise.
AlgebraElement deserialize(std::string_view text);

// Human-readable form: "2/5+1/5i", "(1-i-j-k)/4" style is not produced;
// output is a sum of coefficient*unit terms, "0" for zero.
std::string pretty(const ExactElement& x);
std::string pretty(const FloatElement& x);
std::string pretty(const AlgebraElement& x);

// Parses either the serialized form or a literal such as "2/5+1/5i",
// "0.3+0.4i", "1/2+1/2i+1/2j+1/2k", "e1-2*e5" (write
// "2*e5", not "2e5", which reads as a float).  `hint` fixes the algebra for
// literals without units (or with units of a subalgebra).
AlgebraElement parse_element(std::string_view text, Algebra hint, Backend backend);

}  // namespace cfrac
