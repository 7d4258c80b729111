#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "cfrac/cf.hpp"
#include "cfrac/linalg.hpp"
#include "cfrac/surd.hpp"

namespace cfrac {

using QVector = std::vector<Rational>;
using DVector = std::vector<double>;

enum class PieceKind { Sphere, Point };

// A round sphere {x : |x - c|^2 = r^2, A x = b} with rational data, or a
// single rational point (r^2 = 0).  The affine hull is kept as the reduced
// row echelon form of [A | b], so equal pieces have equal data.  A sphere
// whose hull is a line is a pair of points (a 0-sphere).
class SpherePiece {
 public:
  static SpherePiece unit_sphere(std::size_t n);
  static SpherePiece sphere(QVector center, Rational radius_sq, const QMatrix& hull_aug);
  static SpherePiece point(QVector p);

  PieceKind kind() const { return radius_sq_ == 0 ? PieceKind::Point : PieceKind::Sphere; }
  std::size_t ambient() const { return center_.size(); }
  const QVector& center() const { return center_; }
  const Rational& radius_sq() const { return radius_sq_; }
  // Rows of the reduced [A | b]; empty for the whole space.
  const QMatrix& hull() const { return hull_; }
  std::size_t hull_dim() const { return ambient() - hull_.rows(); }
  // Sphere dimension (hull_dim - 1), 0 for a point.
  int dimension() const;
  double radius() const;

  SpherePiece translated(const QVector& gamma) const;
  // Image under x -> M x for a rational orthogonal M.
  SpherePiece transformed(const QMatrix& M) const;

  // Exact coordinates of points and 0-spheres (quadratic surds).
  std::vector<std::vector<Surd>> exact_points() const;
  std::vector<DVector> sample(std::size_t count, std::mt19937_64& rng) const;
  double distance(const DVector& x) const;
  DVector closest_point(const DVector& x) const;

  std::string key() const;
  std::string describe() const;
  friend bool operator==(const SpherePiece& a, const SpherePiece& b) {
    return a.center_ == b.center_ && a.radius_sq_ == b.radius_sq_ && a.hull_ == b.hull_;
  }

 private:
  void build_float();
  QVector center_;
  Rational radius_sq_;
  QMatrix hull_;
  DVector center_f_;
  std::vector<DVector> directions_;  // orthonormal basis of the hull directions
};

enum class IntersectionKind { Empty, Point, Sphere, Same };
const char* intersection_kind_name(IntersectionKind k);

struct Intersection {
  IntersectionKind kind = IntersectionKind::Empty;
  SpherePiece piece;
};

// A ∩ B via the radical hyperplane, both hulls, and projection of A's center.
Intersection sphere_intersect(const SpherePiece& A, const SpherePiece& B);

// Translation lattice used by the decomposition.
struct BoundaryLattice {
  std::string name;
  QMatrix basis;  // columns
  std::size_t dim() const { return basis.rows(); }
  // Lattice vectors g with |g - center| <= radius.
  std::vector<QVector> points_within(const DVector& center, double radius) const;
};

// Z1, Z2 (= Zi), Z3, Zi_times_1pi.
BoundaryLattice boundary_lattice(const std::string& name);

struct Provenance {
  std::size_t parent = 0;  // index k of S_j^k
  std::size_t other = 0;   // index k' of the translated piece
  QVector gamma;
  std::size_t multiplicity = 1;  // number of (k, k', gamma) producing this piece
};

struct Level {
  std::vector<SpherePiece> pieces;
  std::vector<Provenance> provenance;  // first producer of each piece
  std::size_t intersectors = 0;        // distinct translated pieces meeting some S_j^k nontrivially
};

struct Decomposition {
  BoundaryLattice lattice;
  std::vector<Level> levels;  // levels[0] = {unit sphere}
};

// Levels S_0 ... S_max_level (stopping early at an empty level).  Translates
// with |gamma| beyond the bounding balls are skipped; exact dedup.
Decomposition build_decomposition(const BoundaryLattice& lattice, std::size_t max_level);

struct Census {
  std::size_t points = 0;                        // point pieces
  std::map<int, std::size_t> spheres_by_dim;     // 0-spheres, circles, ...
  std::map<Rational, std::size_t> radius_sq;     // radius^2 multiset of sphere pieces
  std::size_t distinct_points = 0;               // points of point pieces and 0-spheres, exact dedup
  std::string summary() const;
};

Census census(const Level& level);

// Exact distinct points of a level (point pieces and 0-spheres).
std::vector<std::vector<Surd>> level_points(const Level& level);

double distance_to_pieces(const DVector& x, const std::vector<SpherePiece>& pieces);

// d(x, a) < r and a realizes d(x, A) (within 1e-12).
bool voronoi_membership(const DVector& x, const DVector& a, const std::vector<SpherePiece>& pieces, double r);

// Every sampled point of S_{j+1} lies within tol of S_j and on the unit sphere.
CheckResult verify_nesting(const Decomposition& d, std::size_t samples, unsigned long seed, double tol = 1e-9);
// Each piece of each level maps to a piece of the same level under x -> M x.
CheckResult verify_symmetry(const Decomposition& d, const QMatrix& M);
// Max piece dimension at level j is at most n - j - 1 (points allowed).
CheckResult verify_dimension_drop(const Decomposition& d);

struct TrapReport {
  std::vector<double> distances;  // d(T^i x, T^i a)
  std::vector<double> predicted;  // prod_{j<i} |T^j x|^{-1} d(x, a)
  std::vector<FloatElement> digits;
  double worst_relative = 0;
  bool identity_ok = true;
  bool strictly_increasing = true;
  std::size_t steps = 0;
  std::string stop_reason;
};

// Iterates x and a under the same maps T = (iota - gamma), choosing at each
// step the nonzero gamma that keeps T^i a on the sphere and brings T^i x
// closest to the origin.  Stops when no such gamma exists or |T^i x| >= 1.
TrapReport trap_expansion_check(const FloatElement& x, const FloatElement& a, const Inversion& iota,
                                const Order& lattice, std::size_t depth, double tol = 1e-8);

// 2 |{gamma : gamma S ∩ S != empty}|
std::size_t default_trap_depth(const Order& lattice);

struct ProximityRow {
  double epsilon = 0;
  double tau = 0;  // max d(x, A ∩ B) over sampled x in N_eps(A) ∩ N_eps(B)
  std::size_t accepted = 0;
};

struct ProximityReport {
  IntersectionKind relation = IntersectionKind::Empty;
  std::vector<ProximityRow> rows;
  bool monotone = true;
  bool tends_to_zero = true;
  bool linear = true;  // tau/eps bounded over the table
  double linear_constant = 0;
  std::string label = "ESTIMATE (sampled, not a proof)";
};

ProximityReport proximity_estimate(const SpherePiece& A, const SpherePiece& B, const std::vector<double>& epsilons,
                                   std::size_t samples, unsigned long seed);

}  // namespace cfrac
