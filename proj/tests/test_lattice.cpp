#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cfrac/catalog.hpp"
#include "cfrac/domain.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/lattice.hpp"
#include "cfrac/serialize.hpp"
#include "helpers.hpp"

using namespace cfrac;
using cfrac::test::ex;
using cfrac::test::fl;

namespace {

// Brute-force nearest distance over coordinates in [-b, b]^rank.
double brute_nearest_sq(const Order& L, const FloatElement& x, long b) {
  double best = 1e300;
  Coords c(L.rank(), -b);
  while (true) {
    best = std::min(best, norm_sq(L.point(c) - x));
    std::size_t i = 0;
    while (i < c.size() && c[i] == b) c[i++] = -b;
    if (i == c.size()) break;
    ++c[i];
  }
  return best;
}

}  // namespace

TEST(Lattice, BasesAsPrinted) {
  Order H = builtin_order("Hurwitz");
  ASSERT_EQ(H.rank(), 4u);
  EXPECT_EQ(to_float(H.exact_point({0, 0, 0, 1})), to_float(ex("1/2+1/2i+1/2j+1/2k", Algebra::H)));
  Order C = builtin_order("Cayley");
  ASSERT_EQ(C.rank(), 8u);
  EXPECT_EQ(C.exact_point({0, 0, 0, 0, 1, 0, 0, 0}), ex("1/2*e1+1/2*e2+1/2*e3-1/2*e4", Algebra::O));
  Order Z = builtin_order("Z");
  EXPECT_EQ(Z.rank(), 1u);
  EXPECT_EQ(Z.exact_point({1}), ex("1", Algebra::R));
  EXPECT_THROW(builtin_order("NoSuchOrder"), UnknownName);
}

TEST(Lattice, RingAndConjugationFlags) {
  for (const auto& name : builtin_order_names()) {
    Order L = builtin_order(name);
    if (L.is_ring() && L.is_rational()) {
      for (const auto& g : L.generators())
        for (const auto& h : L.generators()) ASSERT_TRUE(contains(L, g * h)) << name;
    }
  }
  EXPECT_TRUE(builtin_order("Cayley").is_ring());
  EXPECT_TRUE(builtin_order("Hurwitz").is_ring());
  EXPECT_TRUE(builtin_order("Hurwitz").conjugation_closed());
}

TEST(Lattice, Membership) {
  Order H = builtin_order("Hurwitz");
  EXPECT_TRUE(contains(H, ex("1/2+1/2i+1/2j+1/2k", Algebra::H)));
  EXPECT_FALSE(contains(H, ex("1/2+1/2i", Algebra::H)));
  Order T = builtin_order("Zi_times_1pi");
  EXPECT_FALSE(contains(T, ex("1", Algebra::C)));
  EXPECT_TRUE(contains(T, ex("1+i", Algebra::C)));
  EXPECT_THROW(contains(T, AlgebraElement(fl("1.0", Algebra::C))), UnsupportedBackend);
}

TEST(Lattice, NearestExamples) {
  Order Zi = builtin_order("Zi");
  EXPECT_EQ(to_float(nearest(Zi, ex("2/5+3/5i", Algebra::C)).value), to_float(ex("i", Algebra::C)));
  Order H = builtin_order("Hurwitz");
  EXPECT_EQ(nearest(H, ex("2/5+2/5i+2/5j+2/5k", Algebra::H)).value, ex("1/2+1/2i+1/2j+1/2k", Algebra::H));
  EXPECT_EQ(nearest(builtin_order("Z"), ex("1/2", Algebra::R)).value, ex("1", Algebra::R));
  EXPECT_EQ(nearest(builtin_order("Z"), ex("-1/2", Algebra::R)).value, ex("0", Algebra::R));
}

TEST(Lattice, NearestMatchesBruteForce) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (const char* name : {"Zi", "Zi_times_1pi", "Hurwitz", "Lipschitz", "Gausenstein"}) {
    Order L = builtin_order(name);
    for (int t = 0; t < 50; ++t) {
      FloatElement x(L.algebra());
      for (std::size_t i = 0; i < x.dim(); ++i) x[i] = u(rng);
      double got = norm_sq(nearest(L, x).value - x);
      ASSERT_NEAR(got, brute_nearest_sq(L, x, 8), 1e-12) << name;
    }
  }
}

TEST(Lattice, NearestIdempotent) {
  for (const char* name : {"Z", "Zi", "Hurwitz", "Cayley"}) {
    Order L = builtin_order(name);
    Coords c(L.rank(), 0);
    c[0] = 2;
    c.back() = -1;
    auto v = L.exact_point(c);
    EXPECT_EQ(nearest(L, v).value, v) << name;
  }
}

TEST(Lattice, DirichletRadii) {
  EXPECT_NEAR(dirichlet_radius(builtin_order("Hurwitz")).value, std::sqrt(0.5), 1e-6);
  EXPECT_NEAR(dirichlet_radius(builtin_order("Lipschitz")).value, 1.0, 1e-6);
  EXPECT_NEAR(dirichlet_radius(builtin_order("Cayley")).value, std::sqrt(0.5), 1e-6);
  EXPECT_NEAR(dirichlet_radius(builtin_order("Zi")).value, std::sqrt(0.5), 1e-9);
}

TEST(Lattice, ShortestVectorAtLeastOne) {
  for (const auto& name : builtin_order_names()) EXPECT_GE(shortest_norm_sq(builtin_order(name)), 1 - 1e-12) << name;
}

TEST(Domain, ChevronAndSquare) {
  Domain ch = Domain::chevron();
  EXPECT_FALSE(ch.contains(ex("9/10", Algebra::C)));
  const double x = 0.3, y = 0.4;
  const bool oracle = y >= -0.5 && y < 0.5 && x * x + y * y < 1 && (x - 1) * (x - 1) + y * y >= 1;
  EXPECT_EQ(ch.contains(ex("3/10+2/5i", Algebra::C)), oracle);
  CFAlgorithm a = catalog_algorithm("hurwitz-A");
  EXPECT_TRUE(a.domain.contains(ex("-1/2", Algebra::C)));
  EXPECT_FALSE(a.domain.contains(ex("1/2", Algebra::C)));
}

TEST(Domain, TilingOnSamples) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-4, 4);
  for (const char* name : {"hurwitz-A", "hurwitz-J", "hurwitz-shifted", "chevron", "quat-hurwitz"}) {
    CFAlgorithm a = catalog_algorithm(name);
    for (int t = 0; t < 200; ++t) {
      FloatElement x(a.algebra);
      for (std::size_t i = 0; i < x.dim(); ++i) x[i] = u(rng);
      auto lp = reduce_into(*a.order, a.domain, x);
      ASSERT_TRUE(a.domain.contains(x - lp.value)) << name;
      int hits = 0;
      for (const auto& c : points_within(*a.order, x, 1.0 + 1e-9))
        if (a.domain.contains(x - a.order->point(c))) ++hits;
      ASSERT_EQ(hits, 1) << name << " " << serialize(x);
    }
  }
}

TEST(Domain, InsideUnitBall) {
  for (const auto& e : catalog_entries()) {
    if (e.space != "division algebra" || e.name == "alpha(a)") continue;
    EXPECT_LE(catalog_algorithm(e.name).domain.sup_norm(), 1 + 1e-9) << e.name;
  }
}
