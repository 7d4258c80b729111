#pragma once

#include <random>

#include "cfrac/algebra.hpp"

namespace cfrac {

// Coefficients p/q with |p/q| <= range and q in [1, max_den].
ExactElement random_exact(Algebra a, std::mt19937_64& rng, long range = 8, long max_den = 64);
ExactElement random_exact_nonzero(Algebra a, std::mt19937_64& rng, long range = 8, long max_den = 64);

// Uniform direction with norm log-uniform in [lo, hi].
FloatElement random_float(Algebra a, std::mt19937_64& rng, double lo = 0.1, double hi = 10.0);

}  // namespace cfrac
