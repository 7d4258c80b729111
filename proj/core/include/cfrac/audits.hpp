#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfrac/cf.hpp"
#include "cfrac/domain.hpp"
#include "cfrac/lattice.hpp"

namespace cfrac {

struct NormalizingFailure {
  FloatElement gamma;
  FloatElement s;
  FloatElement image;  // iota gamma iota s
  std::string reason;
};

struct NormalizingMatch {
  FloatElement gamma;
  FloatElement gamma_prime;
};

struct NormalizingReport {
  bool pass = true;
  std::size_t gammas_checked = 0;
  std::size_t samples_checked = 0;
  std::vector<NormalizingMatch> matches;
  std::vector<NormalizingFailure> failures;
};

// For each lattice gamma with |gamma| <= gamma_radius, samples s on the unit
// sphere with iota gamma iota s on the sphere and looks for gamma' in the
// lattice with iota gamma iota s = gamma' s; then checks the converse on
// S ∩ (S - gamma').  Float audit at tolerance tol.
NormalizingReport sphere_normalizing_audit(const Inversion& iota, const Order& lattice, std::size_t samples,
                                           double gamma_radius = 2.0, unsigned long seed = 1, double tol = 1e-9);

// Arc {e^{i t} : lo <= t <= hi} of the unit circle.
struct SphereArc {
  double lo = 0;
  double hi = 0;
};

struct FinitenessReport {
  bool supported = true;
  std::string note;
  std::vector<FloatElement> points;  // isolated points of closure(K) ∩ S
  std::vector<SphereArc> arcs;
  bool sphere_part_finite = true;
  // s in closure(K) ∩ S with gamma iota s in closure(K) ∩ S for some gamma
  std::vector<FloatElement> condition_points;
  std::vector<SphereArc> condition_arcs;
  bool condition_finite = true;
  std::string verdict() const;  // FINITE, NOT-FINITE or UNSUPPORTED
};

// closure(K) ∩ S and the condition-(1) candidate set.  Exact geometry for K in
// R and C; domains with sup |x| < 1 give the empty set in any algebra.
FinitenessReport finiteness_audit(const Domain& K, const Order& lattice, const Inversion& iota, double tol = 1e-9);

// x in closure(K) within tol.
bool closure_contains(const Domain& K, const FloatElement& x, double tol = 1e-9);

}  // namespace cfrac
