#pragma once

#include <string>

#include "cfrac/boundary.hpp"
#include "cfrac/cf.hpp"

namespace cfrac {

// Ornament figure: unit sphere, sphere pieces as strokes, points as dots.
// n = 3 uses a fixed oblique orthographic projection.
std::string decomposition_svg(const Decomposition& d, std::size_t max_level);

// Tiling of the square [-1, 1]^2 by the first digit of iota(x) for x in K,
// with K, the unit circle and closure(K) ∩ S overlaid.  Complex algorithms only.
std::string domain_svg(const CFAlgorithm& algo, int grid = 120);

}  // namespace cfrac
