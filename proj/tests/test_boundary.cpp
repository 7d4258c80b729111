#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cfrac/boundary.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/lattice.hpp"
#include "oracle_decomposition.hpp"

using namespace cfrac;

namespace {

QVector qv(std::initializer_list<long> v) {
  QVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::map<std::string, std::size_t> rounded_radii(const Census& c) {
  std::map<std::string, std::size_t> out;
  for (const auto& [r2, n] : c.radius_sq) out[oracle::rounded(r2.get_d())] += n;
  return out;
}

void expect_matches_oracle(const char* lattice, std::size_t n, std::size_t levels) {
  auto d = build_decomposition(boundary_lattice(lattice), levels);
  auto o = oracle::decomposition(n, levels);
  ASSERT_EQ(d.levels.size(), o.size()) << lattice;
  for (std::size_t j = 1; j < o.size(); ++j) {
    Census c = census(d.levels[j]);
    auto oc = oracle::census(o[j]);
    EXPECT_EQ(c.points, oc.points) << lattice << " level " << j;
    EXPECT_EQ(c.spheres_by_dim, oc.spheres_by_dim) << lattice << " level " << j;
    EXPECT_EQ(rounded_radii(c), oc.radius_sq) << lattice << " level " << j;
    EXPECT_EQ(c.distinct_points, oc.distinct_points) << lattice << " level " << j;
  }
}

}  // namespace

TEST(SphereIntersect, Examples) {
  auto S2 = SpherePiece::unit_sphere(2);
  auto r = sphere_intersect(S2, S2.translated(qv({1, 0})));
  ASSERT_EQ(r.kind, IntersectionKind::Sphere);
  ASSERT_EQ(r.piece.dimension(), 0);
  auto pts = r.piece.exact_points();
  ASSERT_EQ(pts.size(), 2u);
  for (const auto& p : pts) {
    EXPECT_EQ(p[0], Surd(make_rational(1, 2)));
    EXPECT_EQ(p[1] * p[1], Surd(make_rational(3, 4)));
  }
  auto S3 = SpherePiece::unit_sphere(3);
  auto c = sphere_intersect(S3, S3.translated(qv({1, 1, 1})));
  ASSERT_EQ(c.kind, IntersectionKind::Sphere);
  EXPECT_EQ(c.piece.dimension(), 1);
  EXPECT_EQ(c.piece.radius_sq(), make_rational(1, 4));
  for (const auto& x : c.piece.center()) EXPECT_EQ(x, make_rational(1, 2));
  auto t = sphere_intersect(S3, S3.translated(qv({2, 0, 0})));
  ASSERT_EQ(t.kind, IntersectionKind::Point);
  EXPECT_EQ(t.piece.center(), qv({1, 0, 0}));
  EXPECT_EQ(sphere_intersect(S3, S3).kind, IntersectionKind::Same);
  EXPECT_EQ(sphere_intersect(S3, S3.translated(qv({3, 0, 0}))).kind, IntersectionKind::Empty);
  EXPECT_THROW(sphere_intersect(S2, S3), DimensionMismatch);
}

TEST(Decomposition, Z1) {
  auto d = build_decomposition(boundary_lattice("Z1"), 3);
  ASSERT_EQ(d.levels.size(), 3u);
  EXPECT_EQ(census(d.levels[1]).distinct_points, 2u);
  EXPECT_TRUE(d.levels[2].pieces.empty());
}

TEST(Decomposition, Z2Census) {
  auto d = build_decomposition(boundary_lattice("Z2"), 3);
  Census c1 = census(d.levels[1]);
  EXPECT_EQ(c1.points, 4u);
  EXPECT_EQ(c1.spheres_by_dim.at(0), 8u);
  EXPECT_EQ(c1.distinct_points, 12u);
  // every level-1 point satisfies |x|^2 = 1 and |x - gamma|^2 = 1 for some gamma, exactly
  for (const auto& p : level_points(d.levels[1])) {
    Surd n2 = p[0] * p[0] + p[1] * p[1];
    EXPECT_EQ(n2, Surd(1));
  }
  EXPECT_EQ(census(d.levels[2]).distinct_points, 4u);
  EXPECT_TRUE(d.levels[3].pieces.empty());
}

TEST(Decomposition, Z3Census) {
  auto d = build_decomposition(boundary_lattice("Z3"), 2);
  Census c1 = census(d.levels[1]);
  EXPECT_EQ(c1.points, 6u);
  EXPECT_EQ(c1.spheres_by_dim.at(1), 26u);
  std::map<Rational, std::size_t> radii{{make_rational(1, 4), 8}, {make_rational(1, 2), 12}, {make_rational(3, 4), 6}};
  EXPECT_EQ(c1.radius_sq, radii);
  EXPECT_GT(census(d.levels[2]).distinct_points, 0u);
}

TEST(Decomposition, MatchesBruteForceOracle) {
  expect_matches_oracle("Z1", 1, 3);
  expect_matches_oracle("Z2", 2, 3);
  expect_matches_oracle("Z3", 3, 2);
}

TEST(Decomposition, Invariants) {
  for (const char* name : {"Z2", "Z3"}) {
    auto d = build_decomposition(boundary_lattice(name), 2);
    QMatrix M = QMatrix::identity(d.lattice.dim());
    for (std::size_t i = 1; i < M.rows(); ++i) M(i, i) = -1;
    EXPECT_TRUE(verify_nesting(d, 8, 1).ok) << name;
    EXPECT_TRUE(verify_symmetry(d, M).ok) << name;
    EXPECT_TRUE(verify_dimension_drop(d).ok) << name;
  }
}

TEST(Decomposition, Z3LevelTwoPointsOnTwoCircles) {
  auto d = build_decomposition(boundary_lattice("Z3"), 2);
  for (const auto& p : level_points(d.levels[2])) {
    DVector x{p[0].to_double(), p[1].to_double(), p[2].to_double()};
    std::size_t circles = 0;
    for (const auto& piece : d.levels[1].pieces)
      if (piece.dimension() == 1 && piece.distance(x) < 1e-9) ++circles;
    EXPECT_GE(circles, 2u);
  }
}

TEST(Voronoi, Examples) {
  auto d = build_decomposition(boundary_lattice("Z2"), 1);
  const auto& pieces = d.levels[1].pieces;
  DVector a{std::sqrt(3.0) / 2, 0.5};
  EXPECT_TRUE(voronoi_membership(a, a, pieces, 0.1));
  EXPECT_FALSE(voronoi_membership(a, a, pieces, 0.0));
  DVector x{0.9, 0.0};
  double best = 1e300;
  for (const auto& p : oracle::points(oracle::decomposition(2, 1)[1]))
    best = std::min(best, std::hypot(x[0] - p[0], x[1] - p[1]));
  bool oracle_member = std::hypot(x[0] - a[0], x[1] - a[1]) < 0.5 &&
                       std::hypot(x[0] - a[0], x[1] - a[1]) <= best + 1e-12;
  EXPECT_EQ(voronoi_membership(x, a, pieces, 0.5), oracle_member);
}

TEST(Trap, RealExample) {
  auto rep = trap_expansion_check(FloatElement(Algebra::R, {0.98}), FloatElement(Algebra::R, {1.0}),
                                  Inversion::standard(Algebra::R), builtin_order("Z"), 20);
  ASSERT_GE(rep.steps, 2u);
  EXPECT_NEAR(rep.distances[0], 0.02, 1e-12);
  EXPECT_NEAR(rep.distances[1], 0.02 / 0.98, 1e-12);
  EXPECT_EQ(rep.digits[0], FloatElement(Algebra::R, {2.0}));
  EXPECT_TRUE(rep.identity_ok);
  EXPECT_TRUE(rep.strictly_increasing);
}

TEST(Trap, SelfAndComplex) {
  EXPECT_THROW(trap_expansion_check(FloatElement(Algebra::R, {1.0}), FloatElement(Algebra::R, {1.0}),
                                    Inversion::standard(Algebra::R), builtin_order("Z"), 5),
               Error);
  const double t = M_PI / 3 + 1e-4;
  FloatElement a(Algebra::C, {0.5, std::sqrt(3.0) / 2}), x(Algebra::C, {0.995 * std::cos(t), 0.995 * std::sin(t)});
  auto rep = trap_expansion_check(x, a, Inversion::standard(Algebra::C), builtin_order("Zi"), 10);
  EXPECT_GE(rep.steps, 1u);
  EXPECT_TRUE(rep.identity_ok);
  EXPECT_LE(rep.worst_relative, 1e-8);
}

TEST(Proximity, Estimates) {
  auto A = SpherePiece::unit_sphere(2);
  std::vector<double> eps{1e-2, 1e-3, 1e-4};
  auto same = proximity_estimate(A, A, eps, 500, 1);
  for (const auto& r : same.rows) EXPECT_LE(r.tau, r.epsilon);
  auto tr = proximity_estimate(A, A.translated(qv({1, 0})), eps, 2000, 1);
  EXPECT_TRUE(tr.linear);
  auto tg = proximity_estimate(A, A.translated(qv({2, 0})), eps, 2000, 1);
  EXPECT_FALSE(tg.linear);
  EXPECT_EQ(tg.label, "ESTIMATE (sampled, not a proof)");
}
