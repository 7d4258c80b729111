#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfrac/domain.hpp"
#include "cfrac/lattice.hpp"

namespace cfrac {

enum class InversionKind { Standard, Conjugate, Rotated };

const char* inversion_kind_name(InversionKind k);

// standard: x -> 1/x; conjugate: x -> 1/conj(x); rotated: x -> u * (1/conj(x)).
class Inversion {
 public:
  static Inversion standard(Algebra a);
  static Inversion conjugate(Algebra a);
  static Inversion rotated(const FloatElement& unit);
  static Inversion rotated(const ExactElement& unit);

  InversionKind kind() const { return kind_; }
  Algebra algebra() const { return algebra_; }
  const FloatElement& unit() const { return unit_; }
  const std::optional<ExactElement>& exact_unit() const { return exact_unit_; }

  ExactElement apply(const ExactElement& x) const;
  FloatElement apply(const FloatElement& x) const;
  ExactElement apply_inverse(const ExactElement& y) const;
  FloatElement apply_inverse(const FloatElement& y) const;

  std::string describe() const;

 private:
  InversionKind kind_ = InversionKind::Standard;
  Algebra algebra_ = Algebra::R;
  FloatElement unit_;
  std::optional<ExactElement> exact_unit_;
};

struct CFAlgorithm {
  std::string name;
  Algebra algebra;
  Inversion inversion;
  std::shared_ptr<const Order> order;
  Domain domain;
  std::string note;

  bool proper() const { return domain.sup_norm() < 1 - 1e-12; }
  bool exact_capable() const;
};

// Checks the algorithm invariants: unit inversion, K inside the closed unit
// ball (sampled), algebra agreement.  Throws InvalidConfiguration.
void validate(const CFAlgorithm& algo, unsigned long seed = 1);

template <class T>
struct GaussStep {
  Coords coords;
  Element<T> digit;
  Element<T> next;
};

// The unique lattice point a with y - a in K.  Throws DomainError tagged with step.
template <class T>
LatticePoint<T> reduce_into(const Order& L, const Domain& K, const Element<T>& y, std::size_t step = 0);

// The unique a in the lattice with iota(x) - a in K.
template <class T>
GaussStep<T> gauss_step(const Element<T>& x, const CFAlgorithm& algo, std::size_t step = 0);

enum class Termination { ExactZero, ProbableRational, DepthCap, NoDigit };
const char* termination_name(Termination t);

template <class T>
struct Expansion {
  Element<T> x0;
  std::vector<Element<T>> digits;
  std::vector<Coords> digit_coords;
  std::vector<Element<T>> iterates;  // x_0 .. x_n
  std::vector<double> norms;         // |x_i|
  std::vector<bool> dani;            // |x_i| < 1
  Termination termination = Termination::DepthCap;
  std::string message;

  std::size_t depth() const { return digits.size(); }
};

constexpr std::size_t kDefaultExactDepth = 64;
constexpr std::size_t kDefaultFloatDepth = 200;
constexpr double kProbableRationalThreshold = 1e-13;

template <class T>
Expansion<T> expand(const Element<T>& x0, std::size_t n_max, const CFAlgorithm& algo);

template <class T>
struct Convergent {
  Element<T> P;
  Element<T> Q;
  std::size_t depth = 0;
};

// The suffix recursion P[a_i..] = Q[a_{i+1}..], Q[a_i..] = a_i Q[a_{i+1}..] + P[a_{i+1}..].
template <class T>
Convergent<T> suffix_convergent(const std::vector<Element<T>>& digits, std::size_t begin, std::size_t end,
                                Algebra a);

// Every suffix Q[a_i..a_n] for i = 1..n (index 0 holds Q[a_1..a_n]).
template <class T>
std::vector<Element<T>> suffix_denominators(const std::vector<Element<T>>& digits, Algebra a);

// (P_n, Q_n) for n = 0..N via the backward chain, recomputed per depth.
template <class T>
std::vector<Convergent<T>> convergents_backward(const std::vector<Element<T>>& digits, Algebra a);

// p_n = p_{n-2} + p_{n-1} a_n, q_n likewise; associative algebras only.
template <class T>
std::vector<Convergent<T>> convergents_forward(const std::vector<Element<T>>& digits, Algebra a);

// Forward recursion where allowed, backward chain for O.
template <class T>
std::vector<Convergent<T>> convergents(const std::vector<Element<T>>& digits, Algebra a);

// 1/(a_1 + 1/(a_2 + ... 1/a_n)), folded from the innermost digit.
template <class T>
Element<T> nested_value(const std::vector<Element<T>>& digits, Algebra a, std::size_t begin = 0,
                        std::size_t end = std::size_t(-1));

// T_{a_1}^{-1} ... T_{a_n}^{-1} 0 for any inversion.
template <class T>
Element<T> approximant(const std::vector<Element<T>>& digits, const CFAlgorithm& algo, std::size_t begin = 0,
                       std::size_t end = std::size_t(-1));

struct CheckResult {
  bool ok = true;
  std::size_t failed_at = 0;  // depth of the first failure
  double worst_relative = 0;  // float comparisons
  std::string detail;
};

template <class T>
CheckResult verify_lemma_2_2(const std::vector<Element<T>>& digits, Algebra a);

template <class T>
CheckResult verify_product_is_Q(const std::vector<Element<T>>& digits, Algebra a);

template <class T>
struct ErrorReport {
  double lhs = 0;  // |P_n Q_n^{-1} - x_0|
  double rhs = 0;  // prod |x_i| / |Q_n|
  double relative = 0;
  bool exact_equal = false;  // squared identity, exact backend
  bool ok = false;
};

// Error formula through convergents (standard inversion).
template <class T>
ErrorReport<T> verify_error_formula(const Expansion<T>& exp, std::size_t n, Algebra a, double tol = 1e-9);

// Error formula through tails: |approximant - x_0| = prod |x_i| * prod |tail_i|,
// valid for every inversion kind.
template <class T>
ErrorReport<T> verify_error_route(const Expansion<T>& exp, std::size_t n, const CFAlgorithm& algo,
                                  double tol = 1e-9);

// Q[a_i..a_n] != 0 and |Q[a_i..a_n]|^2 >= 1 for every suffix of every prefix.
template <class T>
CheckResult verify_suffix_denominators(const std::vector<Element<T>>& digits, Algebra a);

template <class T>
CheckResult verify_forward_backward(const std::vector<Element<T>>& digits, Algebra a);

// 2x2 matrix product over R or C: M_n = prod [[0,1],[1,a_i]] = [[p_{n-1},p_n],[q_{n-1},q_n]],
// det M_n = (-1)^n.
template <class T>
CheckResult verify_matrix_product(const std::vector<Element<T>>& digits, Algebra a);

template <class T>
bool verify_dani_hypothesis(const Expansion<T>& exp);

struct Theorem15Evidence {
  bool condition_one = true;       // prod |x_i| != |a| for checked a
  std::size_t lattice_norms_checked = 0;
  std::vector<double> running_product;
  bool product_decreasing = true;
  bool product_reaches_zero = false;  // terminating expansion
  std::string label = "EVIDENCE (finite prefix, not a proof)";
};

template <class T>
Theorem15Evidence theorem_1_5_evidence(const Expansion<T>& exp, const Order& order, double search_radius);

}  // namespace cfrac
