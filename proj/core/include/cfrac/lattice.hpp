#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfrac/algebra.hpp"
#include "cfrac/linalg.hpp"

namespace cfrac {

using Coords = std::vector<long>;

// A lattice in one of the division algebras, spanned by `rank` generators.
// Generators are stored exactly as surds; most orders are rational.
class Order {
 public:
  Order(std::string name, Algebra algebra, std::vector<SurdElement> generators);

  const std::string& name() const { return name_; }
  Algebra algebra() const { return algebra_; }
  std::size_t dim() const { return dimension(algebra_); }
  std::size_t rank() const { return generators_.size(); }
  bool full_rank() const { return rank() == dim(); }
  bool is_rational() const { return rational_; }
  bool is_ring() const { return is_ring_; }
  bool conjugation_closed() const { return conjugation_closed_; }
  bool contains_one() const { return contains_one_; }

  const std::vector<SurdElement>& generators() const { return generators_; }
  // Columns are generators; valid only when is_rational().
  const QMatrix& basis() const;
  const DMatrix& float_basis() const { return basis_f_; }
  // LLL-reduced basis (columns) and the transform with reduced = basis * T.
  const DMatrix& reduced_basis() const { return reduced_; }
  const Matrix<long>& reduction_transform() const { return transform_; }

  // Exact coordinates of x in the generators, if x is in the rational span
  // of the lattice (integrality not required).
  std::optional<std::vector<Rational>> rational_coordinates(const SurdElement& x) const;
  std::optional<std::vector<Rational>> rational_coordinates(const ExactElement& x) const;

  FloatElement point(const Coords& c) const;
  ExactElement exact_point(const Coords& c) const;  // requires is_rational()
  SurdElement surd_point(const Coords& c) const;

 private:
  std::string name_;
  Algebra algebra_;
  std::vector<SurdElement> generators_;
  bool rational_ = true;
  bool is_ring_ = false;
  bool conjugation_closed_ = false;
  bool contains_one_ = false;
  QMatrix basis_;
  DMatrix basis_f_;
  DMatrix reduced_;
  Matrix<long> transform_;
  // Rational system for surd membership: rows indexed by (coordinate, radicand).
  QMatrix expanded_;
  std::vector<std::pair<std::size_t, std::uint64_t>> expanded_rows_;
};

bool contains(const Order& L, const ExactElement& x);
bool contains(const Order& L, const SurdElement& x);
// Float elements are rejected with UnsupportedBackend.
bool contains(const Order& L, const AlgebraElement& x);
std::optional<Coords> integer_coordinates(const Order& L, const ExactElement& x);
std::optional<Coords> integer_coordinates(const Order& L, const SurdElement& x);

// Lattice points p with |p - center| <= radius (float search with a small
// safety margin; callers filter exactly where needed).
std::vector<Coords> points_within(const Order& L, const FloatElement& center, double radius);
void for_each_point_within(const Order& L, const std::vector<double>& center, double radius,
                           const std::function<void(const Coords&, double dist_sq)>& visit);

template <class T>
struct LatticePoint {
  Coords coords;
  Element<T> value;
};

// Nearest lattice point.  Ties go to the candidate with the
// lexicographically smallest remainder x - p in algebra coordinates, so the
// Dirichlet domain of Z^d is [-1/2, 1/2)^d.
LatticePoint<Rational> nearest(const Order& L, const ExactElement& x);
LatticePoint<double> nearest(const Order& L, const FloatElement& x);
AlgebraElement nearest(const Order& L, const AlgebraElement& x);

// Squared length of the shortest nonzero lattice vector.
double shortest_norm_sq(const Order& L);
std::optional<Rational> exact_shortest_norm_sq(const Order& L);

// Voronoi-relevant vectors of the origin cell.
std::vector<Coords> relevant_vectors(const Order& L);

struct DirichletRadius {
  double value = 0;
  bool certified = false;
  std::string method;
  std::vector<FloatElement> farthest;  // vertices realising the radius
};

DirichletRadius dirichlet_radius(const Order& L, unsigned long seed = 1);

// All vertices of the origin Voronoi cell (rank <= 4).
std::vector<FloatElement> voronoi_vertices(const Order& L);

// Catalog of named orders.
std::vector<std::string> builtin_order_names();
Order builtin_order(const std::string& name);

// Lattice with generators g_j * m (right multiplication).
Order right_multiple(const Order& L, const SurdElement& m, std::string name);

}  // namespace cfrac
