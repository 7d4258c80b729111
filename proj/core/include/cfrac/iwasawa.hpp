#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cfrac/cf.hpp"
#include "cfrac/domain.hpp"
#include "cfrac/lattice.hpp"

namespace cfrac {

// X^n_k = {(u, v) in k^n x k : s^2 |u|^2 = 2 Re v}.  The horizontal
// coordinate is stored as u with a fixed scale s^2 (s = 1 is the bare
// paraboloid; s^2 = 2 is the normalization used by the catalog, where the
// horizontal lattice is sqrt(2) times an order of k).
struct IwasawaSpace {
  Algebra k = Algebra::R;
  std::size_t n = 1;
  Rational scale_sq = 1;

  static IwasawaSpace make(Algebra k, std::size_t n, const Rational& scale_sq = 1);
  bool operator==(const IwasawaSpace& o) const { return k == o.k && n == o.n && scale_sq == o.scale_sq; }
  std::string describe() const;
};

template <class T>
struct IwasawaPoint {
  std::vector<Element<T>> u;
  Element<T> v;

  bool is_identity() const;
  bool operator==(const IwasawaPoint& o) const { return u == o.u && v == o.v; }
};

using ExactIwasawaPoint = IwasawaPoint<Rational>;
using FloatIwasawaPoint = IwasawaPoint<double>;

struct Infinity {
  bool operator==(const Infinity&) const { return true; }
};

template <class T>
using ExtendedPoint = std::variant<IwasawaPoint<T>, Infinity>;

template <class T>
T scalar_of(const Rational& q);

// Point with horizontal part u and vertical part s^2|u|^2/2 + im_v.
template <class T>
IwasawaPoint<T> make_point(const IwasawaSpace& X, std::vector<Element<T>> u, const Element<T>& im_v);

template <class T>
IwasawaPoint<T> identity_point(const IwasawaSpace& X);

// s^2 |u|^2 - 2 Re v.
template <class T>
T paraboloid_defect(const IwasawaSpace& X, const IwasawaPoint<T>& p);

// Throws InvalidConfiguration unless p lies on X (exact, or within tol).
template <class T>
void check_point(const IwasawaSpace& X, const IwasawaPoint<T>& p, double tol = 1e-10);

// sum_i conj(a_i) b_i
template <class T>
Element<T> hermitian(const std::vector<Element<T>>& a, const std::vector<Element<T>>& b, Algebra k);

// (u, v) * (u', v') = (u + u', v + s^2 conj(u) u' + v')
template <class T>
IwasawaPoint<T> group_mul(const IwasawaSpace& X, const IwasawaPoint<T>& p, const IwasawaPoint<T>& q);

// (u, v) -> (-u, conj(v))
template <class T>
IwasawaPoint<T> group_inverse(const IwasawaSpace& X, const IwasawaPoint<T>& p);

// gauge^4 = |v|^2
template <class T>
T gauge4(const IwasawaPoint<T>& p);
template <class T>
double gauge(const IwasawaPoint<T>& p);

// d(p, q) = gauge(p^{-1} * q)
template <class T>
T distance4(const IwasawaSpace& X, const IwasawaPoint<T>& p, const IwasawaPoint<T>& q);
template <class T>
double distance(const IwasawaSpace& X, const IwasawaPoint<T>& p, const IwasawaPoint<T>& q);

// (u, v) -> (-u v^{-1}, v^{-1}); v = 0 throws PointAtInfinity.
template <class T>
IwasawaPoint<T> koranyi_inversion(const IwasawaSpace& X, const IwasawaPoint<T>& p);

// Extended inversion exchanging the identity and the point at infinity.
template <class T>
ExtendedPoint<T> koranyi_inversion(const IwasawaSpace& X, const ExtendedPoint<T>& p);

struct InversionIdentityReport {
  double lhs = 0;  // d(x, y)
  double rhs = 0;  // d(ix, iy) |x| |y|
  double relative = 0;
  bool ok = false;
};

// d(x, y) = d(ix, iy) |x| |y|; exact backend compares fourth powers.
template <class T>
InversionIdentityReport verify_inversion_identity(const IwasawaSpace& X, const IwasawaPoint<T>& p,
                                                  const IwasawaPoint<T>& q, double tol = 1e-10);

template <class T>
struct IwasawaDigit {
  std::vector<Element<T>> alpha;
  Element<T> beta;
  std::vector<Coords> alpha_coords;
  Coords vertical_coords;

  IwasawaPoint<T> as_point() const { return {alpha, beta}; }
};

template <class T>
struct NullTriple {
  Element<T> Q;
  std::vector<Element<T>> R;
  Element<T> P;
};

// s^2 |R|^2 - 2 Re(conj(Q) P)
template <class T>
T null_defect(const IwasawaSpace& X, const NullTriple<T>& t);

// A CF algorithm on X^n_k: horizontal lattice L^n with K_1 = K_L^n, vertical
// lattice in Im(k) with K_2, inversion the Koranyi map.
struct IwasawaAlgorithm {
  std::string name;
  IwasawaSpace space;
  std::shared_ptr<const Order> horizontal;
  Domain horizontal_domain;
  std::shared_ptr<const Order> vertical;  // null when Im(k) = 0
  std::optional<Domain> vertical_domain;
  std::shared_ptr<const Order> ring;      // integrality ring for Q, P
  std::string note;

  bool exact_capable() const;
  // sup of the gauge over the closure of K.
  double gauge_radius() const;
};

std::vector<std::string> iwasawa_algorithm_names();
IwasawaAlgorithm iwasawa_algorithm(const std::string& name);

template <class T>
bool in_domain(const IwasawaAlgorithm& algo, const IwasawaPoint<T>& p);

FloatIwasawaPoint sample_point(const IwasawaAlgorithm& algo, std::mt19937_64& rng);
ExactIwasawaPoint sample_point_exact(const IwasawaAlgorithm& algo, std::mt19937_64& rng, long denominator = 64);
// Random point of X with small rational coordinates in [-range, range].
ExactIwasawaPoint random_point_exact(const IwasawaSpace& X, std::mt19937_64& rng, long range = 3,
                                     long denominator = 8);
FloatIwasawaPoint random_point(const IwasawaSpace& X, std::mt19937_64& rng, double range = 3);

template <class T>
struct IwasawaStep {
  IwasawaDigit<T> digit;
  IwasawaPoint<T> next;
};

// x -> a^{-1} * i(x) with a the digit that lands the result in K.
template <class T>
IwasawaStep<T> iwasawa_step(const IwasawaPoint<T>& x, const IwasawaAlgorithm& algo, std::size_t step = 0);

template <class T>
struct IwasawaExpansion {
  IwasawaPoint<T> x0;
  std::vector<IwasawaDigit<T>> digits;
  std::vector<IwasawaPoint<T>> iterates;
  std::vector<double> gauges;
  std::vector<bool> dani;  // gauge < 1
  Termination termination = Termination::DepthCap;

  std::size_t depth() const { return digits.size(); }
};

template <class T>
IwasawaExpansion<T> iwasawa_expand(const IwasawaPoint<T>& x0, const IwasawaAlgorithm& algo, std::size_t n_max);

// Backward suffix recursion from (1, 0, 0):
//   Q = -beta Q' - s^2 conj(alpha) R' - P',  R = alpha Q' + R',  P = -Q'.
template <class T>
NullTriple<T> qrp_suffix(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits, std::size_t begin,
                         std::size_t end);

// Convergent triples for every prefix, backward recursion per depth.
template <class T>
std::vector<NullTriple<T>> qrp_convergents(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits);

// First column of B_{a_1} ... B_{a_n} for every prefix.
template <class T>
std::vector<NullTriple<T>> qrp_matrix(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits);

// (R Q^{-1}, P Q^{-1})
template <class T>
IwasawaPoint<T> convergent_point(const IwasawaSpace& X, const NullTriple<T>& t);

// T_{a_1}^{-1} ... T_{a_n}^{-1} 0 with T_a^{-1} y = i(a * y).
template <class T>
IwasawaPoint<T> nested_point(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits, std::size_t begin,
                             std::size_t end);

template <class T>
CheckResult verify_qrp_routes(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits);
template <class T>
CheckResult verify_null_triples(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits);
template <class T>
CheckResult verify_convergent_points(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits);
template <class T>
CheckResult verify_iwasawa_suffix_denominators(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits);

struct IwasawaErrorReport {
  double lhs = 0;  // d(convergent point, x_0)
  double rhs = 0;  // prod gauge(x_i) / |Q_n|^{1/2}
  double relative = 0;
  bool exact_equal = false;
  bool ok = false;
};

template <class T>
IwasawaErrorReport verify_iwasawa_error(const IwasawaExpansion<T>& exp, std::size_t n, const IwasawaSpace& X,
                                        double tol = 1e-9);

// Q_n and P_n of every convergent lie in the integrality ring.
bool verify_integrality(const IwasawaAlgorithm& algo, const std::vector<NullTriple<Rational>>& triples);
bool verify_integrality(const IwasawaAlgorithm& algo, const IwasawaExpansion<Rational>& exp);

std::string serialize(const IwasawaSpace& X, const ExactIwasawaPoint& p);
std::string serialize(const IwasawaSpace& X, const FloatIwasawaPoint& p);
// "u_1;...;u_n|v" with each coordinate an element literal of k.
std::variant<ExactIwasawaPoint, FloatIwasawaPoint> parse_iwasawa_point(const std::string& text,
                                                                       const IwasawaSpace& X, Backend b);

}  // namespace cfrac
