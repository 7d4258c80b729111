#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cfrac/lattice.hpp"

namespace cfrac {

enum class DomainKind { Dirichlet, Box, Chevron };

const char* domain_kind_name(DomainKind k);

// Half-open interval [lo, hi) with surd endpoints.
struct Interval {
  Surd lo;
  Surd hi;
};

// A fundamental domain K for digit selection.
//  - Dirichlet: the Voronoi cell of the origin with the nearest() tie-break.
//  - Box: x = sum t_j f_j with t_j in [lo_j, hi_j); the frame may span a
//    proper subspace, in which case K lies in that subspace.
//  - Chevron: a + b i with b in [-1/2, 1/2), |x| < 1, |x - 1| >= 1.
class Domain {
 public:
  static Domain dirichlet(std::shared_ptr<const Order> order);
  static Domain box(Algebra algebra, std::vector<ExactElement> frame, std::vector<Interval> bounds);
  static Domain unit_box(Algebra algebra, std::size_t span_dim, const Surd& lo, const Surd& hi);
  static Domain chevron();

  DomainKind kind() const { return kind_; }
  Algebra algebra() const { return algebra_; }
  const std::shared_ptr<const Order>& order() const { return order_; }
  const std::vector<ExactElement>& frame() const { return frame_; }
  const std::vector<Interval>& bounds() const { return bounds_; }

  bool contains(const ExactElement& x) const;
  bool contains(const FloatElement& x) const;

  // max |x| over the closure of K.
  double sup_norm() const;

  // Corners of the closure (box kinds), in algebra coordinates.
  std::vector<FloatElement> corners() const;

  // Uniform sample from K.
  FloatElement sample(std::mt19937_64& rng) const;
  // Sample with small-denominator rational coordinates, exactly inside K.
  ExactElement sample_exact(std::mt19937_64& rng, long denominator = 256) const;

  std::string describe() const;

 private:
  DomainKind kind_ = DomainKind::Box;
  Algebra algebra_ = Algebra::R;
  std::shared_ptr<const Order> order_;
  std::vector<ExactElement> frame_;
  std::vector<Interval> bounds_;
  QMatrix frame_matrix_;
  DMatrix frame_float_;
  mutable double sup_cache_ = -1;
};

}  // namespace cfrac
