#include <gtest/gtest.h>

#include <cmath>

#include "cfrac/audits.hpp"
#include "cfrac/catalog.hpp"

using namespace cfrac;

namespace {

bool has_point(const std::vector<FloatElement>& pts, double x, double y) {
  for (const auto& p : pts)
    if (std::hypot(p[0] - x, p[1] - y) < 1e-9) return true;
  return false;
}

}  // namespace

TEST(Normalizing, StandardOnGaussian) {
  auto r = sphere_normalizing_audit(Inversion::standard(Algebra::C), builtin_order("Zi"), 16);
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.gammas_checked, 0u);
}

TEST(Normalizing, ConjugateIsIdentityOnSphere) {
  auto r = sphere_normalizing_audit(Inversion::conjugate(Algebra::C), builtin_order("Zi"), 8);
  EXPECT_TRUE(r.pass);
  for (const auto& m : r.matches) EXPECT_LT(norm(m.gamma - m.gamma_prime), 1e-12);
}

TEST(Normalizing, RotatedFailsWithWitness) {
  auto a = catalog_algorithm("hurwitz-J-rotated");
  auto r = sphere_normalizing_audit(a.inversion, *a.order, 16);
  ASSERT_FALSE(r.pass);
  const double t = M_PI / 10;
  bool witness = false;
  for (const auto& f : r.failures)
    witness = witness || (std::fabs(f.gamma[0] + 2) < 1e-12 && std::fabs(f.gamma[1]) < 1e-12 &&
                          std::hypot(f.s[0] - std::cos(t), f.s[1] + std::sin(t)) < 1e-9 &&
                          std::hypot(f.image[0] - std::cos(11 * t), f.image[1] - std::sin(11 * t)) < 1e-9);
  EXPECT_TRUE(witness);
}

TEST(Finiteness, HurwitzJ) {
  auto a = catalog_algorithm("hurwitz-J");
  auto r = finiteness_audit(a.domain, *a.order, a.inversion);
  EXPECT_EQ(r.verdict(), "FINITE");
  ASSERT_EQ(r.points.size(), 4u);
  EXPECT_TRUE(has_point(r.points, 1, 0));
  EXPECT_TRUE(has_point(r.points, -1, 0));
  EXPECT_TRUE(has_point(r.points, 0, 1));
  EXPECT_TRUE(has_point(r.points, 0, -1));
}

TEST(Finiteness, ShiftedAndChevron) {
  auto s = catalog_algorithm("hurwitz-shifted");
  auto rs = finiteness_audit(s.domain, *s.order, s.inversion);
  EXPECT_EQ(rs.verdict(), "FINITE");
  EXPECT_TRUE(has_point(rs.points, std::sqrt(3.0) / 2, 0.5));
  auto c = catalog_algorithm("chevron");
  auto rc = finiteness_audit(c.domain, *c.order, c.inversion);
  EXPECT_EQ(rc.verdict(), "NOT-FINITE");
  ASSERT_FALSE(rc.arcs.empty());
  EXPECT_NEAR(rc.arcs[0].lo, 5 * M_PI / 6, 1e-9);
  EXPECT_NEAR(rc.arcs[0].hi, 7 * M_PI / 6, 1e-9);
}

TEST(Finiteness, ProperDomainsEmpty) {
  for (const char* name : {"hurwitz-A", "quat-hurwitz", "r3-box"}) {
    auto a = catalog_algorithm(name);
    auto r = finiteness_audit(a.domain, *a.order, a.inversion);
    EXPECT_EQ(r.verdict(), "FINITE") << name;
    EXPECT_TRUE(r.points.empty()) << name;
  }
}
