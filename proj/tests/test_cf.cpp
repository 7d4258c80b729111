#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cfrac/catalog.hpp"
#include "cfrac/cf.hpp"
#include "cfrac/errors.hpp"
#include "helpers.hpp"

using namespace cfrac;
using cfrac::test::ex;
using cfrac::test::within_float_floor;

namespace {

std::vector<ExactElement> ints(std::initializer_list<long> v) {
  std::vector<ExactElement> out;
  for (long x : v) out.push_back(ExactElement::scalar(Algebra::R, Rational(x)));
  return out;
}

}  // namespace

TEST(GaussStep, Examples) {
  auto regular = catalog_algorithm("regular");
  auto s = gauss_step(ex("2/3", Algebra::R), regular);
  EXPECT_EQ(s.digit, ex("1", Algebra::R));
  EXPECT_EQ(s.next, ex("1/2", Algebra::R));
  auto hA = catalog_algorithm("hurwitz-A");
  auto t = gauss_step(ex("2/5+1/5i", Algebra::C), hA);
  EXPECT_EQ(t.digit, ex("2-i", Algebra::C));
  EXPECT_TRUE(t.next.is_zero());
  EXPECT_THROW(gauss_step(ex("0", Algebra::R), regular), Terminated);
}

TEST(Expand, Examples) {
  auto regular = catalog_algorithm("regular");
  auto e = expand(ex("2/3", Algebra::R), 10, regular);
  EXPECT_EQ(e.digits, ints({1, 2}));
  EXPECT_EQ(e.termination, Termination::ExactZero);
  auto h = expand(ex("2/5+1/5i", Algebra::C), 10, catalog_algorithm("hurwitz-A"));
  ASSERT_EQ(h.depth(), 1u);
  EXPECT_EQ(h.digits[0], ex("2-i", Algebra::C));
  for (const char* name : {"regular", "hurwitz-A", "quat-hurwitz", "oct-cayley"}) {
    auto a = catalog_algorithm(name);
    EXPECT_EQ(expand(ExactElement(a.algebra), 10, a).depth(), 0u) << name;
  }
}

TEST(Convergents, Examples) {
  auto one = convergents(ints({5}), Algebra::R);
  EXPECT_EQ(one.back().P, ex("1", Algebra::R));
  EXPECT_EQ(one.back().Q, ex("5", Algebra::R));
  auto c = convergents(ints({1, 1, 1}), Algebra::R);
  EXPECT_EQ(c.back().P, ex("2", Algebra::R));
  EXPECT_EQ(c.back().Q, ex("3", Algebra::R));
  auto e = convergents(std::vector<ExactElement>{}, Algebra::R);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].P, ex("0", Algebra::R));
  EXPECT_EQ(e[0].Q, ex("1", Algebra::R));
}

TEST(NestedValue, Examples) {
  EXPECT_EQ(nested_value(ints({1, 1, 1}), Algebra::R), ex("2/3", Algebra::R));
  EXPECT_EQ(nested_value(ints({7}), Algebra::R), ex("1/7", Algebra::R));
  EXPECT_EQ(nested_value(std::vector<ExactElement>{ex("2-i", Algebra::C)}, Algebra::C), ex("2/5+1/5i", Algebra::C));
  EXPECT_THROW(nested_value(ints({1, -1}), Algebra::R), ZeroDenominator);
}

TEST(Lemmas, HandExamples) {
  EXPECT_TRUE(verify_lemma_2_2(ints({1, 1, 1}), Algebra::R).ok);
  EXPECT_TRUE(verify_product_is_Q(ints({1, 1, 1}), Algebra::R).ok);
  EXPECT_TRUE(verify_product_is_Q(std::vector<ExactElement>{}, Algebra::R).ok);
  auto e = expand(ex("2/3", Algebra::R), 10, catalog_algorithm("regular"));
  auto r = verify_error_formula(e, 2, Algebra::R);
  EXPECT_TRUE(r.exact_equal);
  EXPECT_EQ(r.lhs, 0.0);
}

TEST(Lemmas, SilverRatio) {
  auto regular = catalog_algorithm("regular");
  const double x0 = std::sqrt(2.0) - 1;
  auto e = expand(FloatElement(Algebra::R, {x0}), 12, regular);
  for (const auto& d : e.digits) EXPECT_EQ(d[0], 2.0);
  // q_n: 1, 2, 5, 12, ...
  double qm = 1, q = 2;
  for (std::size_t n = 1; n <= 12; ++n) {
    auto r = verify_error_formula(e, n, Algebra::R);
    const double oracle = std::pow(x0, double(n + 1)) / q;
    EXPECT_TRUE(within_float_floor(r.lhs, r.rhs)) << n;
    EXPECT_TRUE(within_float_floor(r.lhs, oracle)) << n;
    double next = 2 * q + qm;
    qm = q;
    q = next;
  }
}

TEST(Lemmas, RandomExactExpansions) {
  std::mt19937_64 rng(21);
  for (const char* name : {"regular", "hurwitz-A", "quat-hurwitz", "quat-lipschitz", "oct-cayley"}) {
    auto a = catalog_algorithm(name);
    for (int t = 0; t < 20; ++t) {
      auto e = expand(a.domain.sample_exact(rng), 10, a);
      ASSERT_TRUE(verify_lemma_2_2(e.digits, a.algebra).ok) << name;
      ASSERT_TRUE(verify_product_is_Q(e.digits, a.algebra).ok) << name;
      ASSERT_TRUE(verify_suffix_denominators(e.digits, a.algebra).ok) << name;
      ASSERT_TRUE(verify_dani_hypothesis(e)) << name;
      for (std::size_t n = 1; n <= e.depth(); ++n) ASSERT_TRUE(verify_error_formula(e, n, a.algebra).exact_equal);
      if (is_associative(a.algebra)) ASSERT_TRUE(verify_forward_backward(e.digits, a.algebra).ok) << name;
      if (is_commutative(a.algebra)) ASSERT_TRUE(verify_matrix_product(e.digits, a.algebra).ok) << name;
    }
  }
}

TEST(Lemmas, RandomHurwitzFloatDepth20) {
  std::mt19937_64 rng(23);
  auto a = catalog_algorithm("hurwitz-A");
  for (int t = 0; t < 20; ++t) {
    auto e = expand(a.domain.sample(rng), 20, a);
    auto r = verify_error_formula(e, e.depth(), Algebra::C);
    ASSERT_TRUE(within_float_floor(r.lhs, r.rhs));
  }
}

TEST(Dani, Examples) {
  auto e = expand(ex("0", Algebra::R), 5, catalog_algorithm("regular"));
  EXPECT_TRUE(verify_dani_hypothesis(e));
  Expansion<Rational> bad;
  bad.x0 = ex("1/2", Algebra::R);
  bad.iterates = {ex("1/2", Algebra::R), ex("3/2", Algebra::R)};
  bad.norms = {0.5, 1.5};
  bad.dani = {true, false};
  EXPECT_FALSE(verify_dani_hypothesis(bad));
}

TEST(RouteCheck, NonstandardInversion) {
  std::mt19937_64 rng(25);
  auto a = catalog_algorithm("hurwitz-J-rotated");
  for (int t = 0; t < 10; ++t) {
    auto e = expand(a.domain.sample(rng), 15, a);
    for (std::size_t n = 1; n <= e.depth(); ++n) {
      auto r = verify_error_route(e, n, a);
      ASSERT_TRUE(within_float_floor(r.lhs, r.rhs)) << n;
    }
  }
}

TEST(Theorem15Evidence, GoldenRatio) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  auto e = expand(FloatElement(Algebra::R, {g}), 10, catalog_algorithm("regular"));
  auto ev = theorem_1_5_evidence(e, builtin_order("Z"), 3.0);
  ASSERT_EQ(ev.running_product.size(), 11u);
  EXPECT_NEAR(ev.running_product.back(), std::pow(g, 11), 1e-6);
  EXPECT_TRUE(ev.condition_one);
  EXPECT_TRUE(ev.product_decreasing);
  auto term = expand(ex("2/3", Algebra::R), 10, catalog_algorithm("regular"));
  EXPECT_TRUE(theorem_1_5_evidence(term, builtin_order("Z"), 3.0).product_reaches_zero);
}

TEST(Catalog, ValidateAll) {
  for (const auto& e : catalog_entries()) {
    if (e.space != "division algebra" || e.name == "alpha(a)") continue;
    EXPECT_NO_THROW(validate(catalog_algorithm(e.name))) << e.name;
  }
  EXPECT_NO_THROW(validate(catalog_algorithm("alpha(1/2)")));
  EXPECT_THROW(catalog_algorithm("alpha(3/2)"), InvalidConfiguration);
  EXPECT_THROW(catalog_algorithm("nope"), UnknownName);
}
