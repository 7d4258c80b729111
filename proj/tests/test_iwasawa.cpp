#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cfrac/errors.hpp"
#include "cfrac/iwasawa.hpp"
#include "helpers.hpp"

using namespace cfrac;
using cfrac::test::ex;

namespace {

ExactIwasawaPoint pt(const char* u, const char* v, Algebra k = Algebra::C) { return {{ex(u, k)}, ex(v, k)}; }

}  // namespace

TEST(Iwasawa, GroupMulExamples) {
  auto X = IwasawaSpace::make(Algebra::C, 1);
  auto p = pt("1", "1/2+i"), q = pt("1", "1/2-i");
  auto r = group_mul(X, p, q);
  EXPECT_EQ(r, pt("2", "2"));
  EXPECT_EQ(paraboloid_defect(X, r), 0);
  EXPECT_EQ(group_mul(X, p, group_inverse(X, p)), identity_point<Rational>(X));
  EXPECT_EQ(group_mul(X, identity_point<Rational>(X), p), p);
}

TEST(Iwasawa, GaugeAndDistance) {
  auto X = IwasawaSpace::make(Algebra::C, 1);
  EXPECT_NEAR(gauge(pt("0", "3i")), std::sqrt(3.0), 1e-15);
  auto p = pt("1", "1/2+i");
  EXPECT_EQ(distance4(X, p, p), 0);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto a = random_point(X, rng), b = random_point(X, rng);
    EXPECT_NEAR(distance(X, a, b), distance(X, b, a), 1e-10);
  }
}

TEST(Iwasawa, KoranyiExamples) {
  auto X = IwasawaSpace::make(Algebra::C, 1);
  auto r = koranyi_inversion(X, pt("1", "1/2+1/2i"));
  EXPECT_EQ(r, pt("-1+i", "1-i"));
  EXPECT_EQ(paraboloid_defect(X, r), 0);
  EXPECT_EQ(gauge4(koranyi_inversion(X, pt("0", "4i"))), make_rational(1, 16));
  EXPECT_THROW(koranyi_inversion(X, identity_point<Rational>(X)), PointAtInfinity);
  ExtendedPoint<Rational> inf = Infinity{};
  EXPECT_EQ(std::get<ExactIwasawaPoint>(koranyi_inversion(X, inf)), identity_point<Rational>(X));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto p = random_point_exact(X, rng);
    if (p.v.is_zero()) continue;
    EXPECT_EQ(koranyi_inversion(X, koranyi_inversion(X, p)), p);
  }
}

TEST(Iwasawa, RejectsOctonions) { EXPECT_THROW(IwasawaSpace::make(Algebra::O, 1), InvalidConfiguration); }

TEST(Iwasawa, InversionIdentity) {
  auto X = IwasawaSpace::make(Algebra::C, 1);
  auto p = pt("1", "1/2+i");
  EXPECT_TRUE(verify_inversion_identity(X, p, p).ok);
  std::mt19937_64 rng(7);
  for (const auto& Y : {X, IwasawaSpace::make(Algebra::H, 1), IwasawaSpace::make(Algebra::R, 3)})
    for (int t = 0; t < 50; ++t) {
      auto a = random_point_exact(Y, rng), b = random_point_exact(Y, rng);
      if (a.v.is_zero() || b.v.is_zero()) continue;
      ASSERT_TRUE(verify_inversion_identity(Y, a, b).ok);
      ASSERT_TRUE(verify_inversion_identity(Y, random_point(Y, rng), random_point(Y, rng), 1e-10).ok);
    }
}

TEST(Iwasawa, NullTripleBaseCases) {
  auto X = IwasawaSpace::make(Algebra::C, 1);
  auto e = qrp_convergents<Rational>(X, {});
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].Q, ex("1", Algebra::C));
  EXPECT_TRUE(e[0].R[0].is_zero());
  EXPECT_TRUE(e[0].P.is_zero());
  IwasawaDigit<Rational> d{{ex("1", Algebra::C)}, ex("1/2+i", Algebra::C), {}, {}};
  auto one = qrp_convergents(X, std::vector{d});
  EXPECT_EQ(one.back().Q, ex("-1/2-i", Algebra::C));
  EXPECT_EQ(one.back().R[0], ex("1", Algebra::C));
  EXPECT_EQ(one.back().P, ex("-1", Algebra::C));
}

TEST(Iwasawa, Expansions) {
  std::mt19937_64 rng(9);
  for (const auto& name : iwasawa_algorithm_names()) {
    auto algo = iwasawa_algorithm(name);
    const auto& X = algo.space;
    EXPECT_EQ(iwasawa_expand(identity_point<Rational>(X), algo, 5).depth(), 0u);
    for (int t = 0; t < 10; ++t) {
      auto exp = iwasawa_expand(sample_point_exact(algo, rng), algo, 10);
      for (bool d : exp.dani) ASSERT_TRUE(d) << name;
      ASSERT_TRUE(verify_null_triples(X, exp.digits).ok);
      ASSERT_TRUE(verify_qrp_routes(X, exp.digits).ok);
      ASSERT_TRUE(verify_convergent_points(X, exp.digits).ok);
      ASSERT_TRUE(verify_iwasawa_suffix_denominators(X, exp.digits).ok);
      ASSERT_TRUE(verify_integrality(algo, exp)) << name;
      for (const auto& dg : exp.digits) ASSERT_EQ(null_defect(X, NullTriple<Rational>{ex("1", X.k), dg.alpha, dg.beta}), 0);
      for (std::size_t n = 1; n <= exp.depth(); ++n) ASSERT_TRUE(verify_iwasawa_error(exp, n, X).exact_equal);
    }
  }
}

TEST(Iwasawa, IntegrityNegativeControl) {
  auto algo = iwasawa_algorithm("x1c-heisenberg");
  std::mt19937_64 rng(11);
  auto exp = iwasawa_expand(sample_point_exact(algo, rng), algo, 6);
  ASSERT_GT(exp.depth(), 0u);
  auto triples = qrp_convergents(algo.space, exp.digits);
  EXPECT_TRUE(verify_integrality(algo, triples));
  triples.back().Q[0] += make_rational(1, 3);
  EXPECT_FALSE(verify_integrality(algo, triples));
}

TEST(Iwasawa, ExactPointParsing) {
  auto X = iwasawa_algorithm("x1h").space;
  auto p = parse_iwasawa_point("1/4+1/8i|5/64+1/8j", X, Backend::Exact);
  ASSERT_TRUE(std::holds_alternative<ExactIwasawaPoint>(p));
  auto q = std::get<ExactIwasawaPoint>(p);
  EXPECT_EQ(std::get<ExactIwasawaPoint>(parse_iwasawa_point(serialize(X, q), X, Backend::Exact)), q);
  EXPECT_THROW(parse_iwasawa_point("1/4|0", X, Backend::Exact), InvalidConfiguration);
}
