#include "cfrac/random.hpp"

#include <cmath>

namespace cfrac {

ExactElement random_exact(Algebra a, std::mt19937_64& rng, long range, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  ExactElement x(a);
  for (std::size_t i = 0; i < dimension(a); ++i) {
    long q = den(rng);
    std::uniform_int_distribution<long> num(-range * q, range * q);
    x[i] = make_rational(num(rng), q);
  }
  return x;
}

ExactElement random_exact_nonzero(Algebra a, std::mt19937_64& rng, long range, long max_den) {
  ExactElement x = random_exact(a, rng, range, max_den);
  while (x.is_zero()) x = random_exact(a, rng, range, max_den);
  return x;
}

FloatElement random_float(Algebra a, std::mt19937_64& rng, double lo, double hi) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  FloatElement x(a);
  double len = 0;
  while (len < 1e-12) {
    for (std::size_t i = 0; i < dimension(a); ++i) x[i] = g(rng);
    len = norm(x);
  }
  return scale(x, std::exp(u(rng)) / len);
}

}  // namespace cfrac
