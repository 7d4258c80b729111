#include <gtest/gtest.h>

#include <array>
#include <random>

#include "cfrac/algebra.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/random.hpp"
#include "cfrac/serialize.hpp"
#include "helpers.hpp"

using namespace cfrac;
using cfrac::test::ex;

namespace {

// Independent Cayley-Dickson oracle: octonions as pairs of Hamilton quaternions,
// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
using Q4 = std::array<Rational, 4>;

Q4 hamilton(const Q4& p, const Q4& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3], p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1], p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}
Q4 qconj(const Q4& p) { return {p[0], -p[1], -p[2], -p[3]}; }
Q4 qsub(const Q4& p, const Q4& q) { return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]}; }
Q4 qadd(const Q4& p, const Q4& q) { return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]}; }

std::array<Rational, 8> oracle_mul(const ExactElement& x, const ExactElement& y) {
  Q4 a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]}, c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  Q4 lo = qsub(hamilton(a, c), hamilton(qconj(d), b));
  Q4 hi = qadd(hamilton(d, a), hamilton(b, qconj(c)));
  return {lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]};
}

}  // namespace

TEST(Algebra, QuaternionBasisRule) { EXPECT_EQ(ex("i", Algebra::H) * ex("j", Algebra::H), ex("k", Algebra::H)); }

TEST(Algebra, ComplexIdentityCase) {
  EXPECT_EQ(ex("1+i", Algebra::C) * ex("1-i", Algebra::C), ex("2", Algebra::C));
}

TEST(Algebra, OctonionNonassociativityWitness) {
  auto e1 = ExactElement::basis(Algebra::O, 1), e2 = ExactElement::basis(Algebra::O, 2),
       e4 = ExactElement::basis(Algebra::O, 4);
  EXPECT_NE((e1 * e2) * e4, e1 * (e2 * e4));
  EXPECT_EQ((e1 * e2) * e4, -(e1 * (e2 * e4)));
}

TEST(Algebra, DoublingUnitConvention) {
  auto e = [](std::size_t i) { return ExactElement::basis(Algebra::O, i); };
  EXPECT_EQ(e(1) * e(4), e(5));
  EXPECT_EQ(e(2) * e(4), e(6));
  EXPECT_EQ(e(3) * e(4), e(7));
}

TEST(Algebra, BasisTableMatchesCayleyDicksonOracle) {
  const auto& table = basis_table();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      auto o = oracle_mul(ExactElement::basis(Algebra::O, i), ExactElement::basis(Algebra::O, j));
      for (std::size_t k = 0; k < 8; ++k) {
        Rational expect = k == static_cast<std::size_t>(table[i][j].index) ? Rational(table[i][j].sign) : Rational(0);
        EXPECT_EQ(o[k], expect) << "e" << i << " e" << j;
      }
    }
}

TEST(Algebra, RandomProductsMatchOracle) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto x = random_exact(Algebra::O, rng), y = random_exact(Algebra::O, rng);
    auto p = x * y;
    auto o = oracle_mul(x, y);
    for (std::size_t k = 0; k < 8; ++k) ASSERT_EQ(p[k], o[k]);
  }
}

TEST(Algebra, Inverses) {
  EXPECT_EQ(inv(ex("i", Algebra::C)), ex("-i", Algebra::C));
  EXPECT_EQ(inv(ex("1+i+j+k", Algebra::H)), ex("1/4-1/4i-1/4j-1/4k", Algebra::H));
  EXPECT_EQ(inv(ex("2*e5", Algebra::O)), ex("-1/2*e5", Algebra::O));
  EXPECT_THROW(inv(ExactElement(Algebra::H)), DivisionByZero);
}

TEST(Algebra, Quotients) {
  EXPECT_EQ(quotient(ex("1", Algebra::R), ex("2", Algebra::R)), ex("1/2", Algebra::R));
  EXPECT_EQ(quotient(ex("k", Algebra::H), ex("j", Algebra::H)), ex("i", Algebra::H));
  std::mt19937_64 rng(5);
  for (Algebra a : {Algebra::R, Algebra::C, Algebra::H, Algebra::O}) {
    auto x = random_exact_nonzero(a, rng);
    EXPECT_EQ(quotient(x, x), ExactElement::one(a));
    EXPECT_EQ(x * inv(x), ExactElement::one(a));
  }
  EXPECT_THROW(quotient(ex("1", Algebra::R), ex("0", Algebra::R)), DivisionByZero);
}

TEST(Algebra, MismatchErrors) {
  EXPECT_THROW(ex("i", Algebra::C) * ex("i", Algebra::H), AlgebraMismatch);
  AlgebraElement a = ex("1", Algebra::R), b = FloatElement(Algebra::R, {1.0});
  EXPECT_THROW(mul(a, b), BackendMismatch);
}

TEST(AlgebraProperties, NormMultiplicativeAndAlternative) {
  std::mt19937_64 rng(11);
  for (Algebra a : {Algebra::R, Algebra::C, Algebra::H, Algebra::O})
    for (int t = 0; t < 100; ++t) {
      auto x = random_exact(a, rng), y = random_exact(a, rng), z = random_exact(a, rng);
      ASSERT_EQ(norm_sq(x * y), norm_sq(x) * norm_sq(y));
      ASSERT_EQ(x * (x * y), (x * x) * y);
      ASSERT_EQ((y * x) * x, y * (x * x));
      if (is_associative(a)) ASSERT_EQ((x * y) * z, x * (y * z));
      if (a == Algebra::H) ASSERT_EQ(conj(x * y), conj(y) * conj(x));
    }
}

TEST(AlgebraProperties, InversionIdentity) {
  std::mt19937_64 rng(13);
  for (Algebra a : {Algebra::R, Algebra::C, Algebra::H, Algebra::O})
    for (int t = 0; t < 100; ++t) {
      auto x = random_exact_nonzero(a, rng), y = random_exact_nonzero(a, rng);
      ASSERT_EQ(norm_sq(x - y), norm_sq(inv(x) - inv(y)) * norm_sq(x) * norm_sq(y));
      auto u = random_float(a, rng), v = random_float(a, rng);
      double l = norm(u - v), r = norm(inv(u) - inv(v)) * norm(u) * norm(v);
      ASSERT_LE(std::fabs(l - r), 1e-10 * l);
    }
}

TEST(Serialize, ExactRoundTrip) {
  std::mt19937_64 rng(17);
  for (Algebra a : {Algebra::R, Algebra::C, Algebra::H, Algebra::O}) {
    auto x = random_exact(a, rng);
    auto back = deserialize(serialize(x));
    ASSERT_TRUE(back.is_exact());
    EXPECT_EQ(back.exact(), x);
  }
  EXPECT_EQ(serialize(ex("1-1/2j+3k", Algebra::H)), "H:1,0,-1/2,3");
}

TEST(Serialize, FloatRoundTrip) {
  FloatElement x(Algebra::C, {0.1, -1e-300});
  auto back = deserialize(serialize(x));
  ASSERT_FALSE(back.is_exact());
  EXPECT_EQ(back.as_float(), x);
}

TEST(Serialize, LiteralsAndErrors) {
  EXPECT_EQ(ex("2/5+1/5i", Algebra::C), ExactElement(Algebra::C, {make_rational(2, 5), make_rational(1, 5)}));
  EXPECT_THROW(parse_element("1+q", Algebra::H, Backend::Exact), ParseError);
  EXPECT_THROW(deserialize("X:1"), UnknownName);
  EXPECT_THROW(deserialize("C:1"), ParseError);
}
