#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cfrac/errors.hpp"
#include "cfrac/rational.hpp"
#include "cfrac/surd.hpp"

namespace cfrac {

enum class Algebra { R, C, H, O };
enum class Backend { Exact, Float };

constexpr std::size_t dimension(Algebra a) {
  switch (a) {
    case Algebra::R: return 1;
    case Algebra::C: return 2;
    case Algebra::H: return 4;
    case Algebra::O: return 8;
  }
  return 0;
}

constexpr bool is_associative(Algebra a) { return a != Algebra::O; }
constexpr bool is_commutative(Algebra a) { return a == Algebra::R || a == Algebra::C; }

const char* algebra_name(Algebra a);
Algebra parse_algebra(const std::string& name);
Algebra algebra_of_dimension(std::size_t d);
const char* backend_name(Backend b);
Backend parse_backend(const std::string& name);

// e_i * e_j = sign * e_index.  The table is for O; R, C and H are the
// leading 1x1, 2x2 and 4x4 blocks.
struct BasisProduct {
  int index;
  int sign;
};
const std::array<std::array<BasisProduct, 8>, 8>& basis_table();

template <class T> struct ScalarTraits;

template <> struct ScalarTraits<Rational> {
  static constexpr Backend backend = Backend::Exact;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
};

template <> struct ScalarTraits<double> {
  static constexpr Backend backend = Backend::Float;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x) { return x == 0.0; }
};

template <> struct ScalarTraits<Surd> {
  static constexpr Backend backend = Backend::Exact;
  static Surd zero() { return Surd(); }
  static Surd one() { return Surd(1); }
  static bool is_zero(const Surd& x) { return x.is_zero(); }
};

template <class T>
class Element {
 public:
  Element() : alg_(Algebra::R), c_(1, ScalarTraits<T>::zero()) {}
  explicit Element(Algebra a) : alg_(a), c_(dimension(a), ScalarTraits<T>::zero()) {}
  Element(Algebra a, std::vector<T> coeffs) : alg_(a), c_(std::move(coeffs)) {
    if (c_.size() != dimension(a))
      throw DimensionMismatch(std::string("expected ") + std::to_string(dimension(a)) +
                              " coefficients for " + algebra_name(a) + ", got " +
                              std::to_string(c_.size()));
  }

  static Element scalar(Algebra a, const T& s) {
    Element e(a);
    e.c_[0] = s;
    return e;
  }
  static Element basis(Algebra a, std::size_t i) {
    Element e(a);
    e.c_.at(i) = ScalarTraits<T>::one();
    return e;
  }
  static Element one(Algebra a) { return basis(a, 0); }

  Algebra algebra() const { return alg_; }
  std::size_t dim() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!ScalarTraits<T>::is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Element& a, const Element& b) { return a.alg_ == b.alg_ && a.c_ == b.c_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  Algebra alg_;
  std::vector<T> c_;
};

using ExactElement = Element<Rational>;
using FloatElement = Element<double>;
using SurdElement = Element<Surd>;

template <class T>
void require_same_algebra(const Element<T>& x, const Element<T>& y) {
  if (x.algebra() != y.algebra())
    throw AlgebraMismatch(std::string("algebra mismatch: ") + algebra_name(x.algebra()) + " vs " +
                          algebra_name(y.algebra()));
}

template <class T>
Element<T> operator+(const Element<T>& x, const Element<T>& y) {
  require_same_algebra(x, y);
  Element<T> r = x;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] += y[i];
  return r;
}

template <class T>
Element<T> operator-(const Element<T>& x, const Element<T>& y) {
  require_same_algebra(x, y);
  Element<T> r = x;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= y[i];
  return r;
}

template <class T>
Element<T> operator-(const Element<T>& x) {
  Element<T> r = x;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] = -r[i];
  return r;
}

template <class T>
Element<T> scale(const Element<T>& x, const T& s) {
  Element<T> r = x;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] *= s;
  return r;
}

template <class T>
Element<T> mul(const Element<T>& x, const Element<T>& y) {
  require_same_algebra(x, y);
  const auto& table = basis_table();
  const std::size_t d = x.dim();
  Element<T> r(x.algebra());
  for (std::size_t i = 0; i < d; ++i) {
    if (ScalarTraits<T>::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (ScalarTraits<T>::is_zero(y[j])) continue;
      const BasisProduct bp = table[i][j];
      T t = x[i] * y[j];
      if (bp.sign > 0)
        r[bp.index] += t;
      else
        r[bp.index] -= t;
    }
  }
  return r;
}

template <class T>
Element<T> operator*(const Element<T>& x, const Element<T>& y) {
  return mul(x, y);
}

template <class T>
Element<T> conj(const Element<T>& x) {
  Element<T> r = x;
  for (std::size_t i = 1; i < r.dim(); ++i) r[i] = -r[i];
  return r;
}

template <class T>
T re(const Element<T>& x) {
  return x[0];
}

template <class T>
Element<T> im(const Element<T>& x) {
  Element<T> r = x;
  r[0] = ScalarTraits<T>::zero();
  return r;
}

template <class T>
T norm_sq(const Element<T>& x) {
  T s = ScalarTraits<T>::zero();
  for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * x[i];
  return s;
}

template <class T>
double norm(const Element<T>& x) {
  return std::sqrt(to_double(norm_sq(x)));
}

template <class T>
Element<T> inv(const Element<T>& x) {
  T n = norm_sq(x);
  if (ScalarTraits<T>::is_zero(n)) throw DivisionByZero("inverse of zero");
  Element<T> r = conj(x);
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] /= n;
  return r;
}

template <class T>
Element<T> quotient(const Element<T>& p, const Element<T>& q) {
  return mul(p, inv(q));
}

// (x, y, z) = (xy)z - x(yz)
template <class T>
Element<T> associator(const Element<T>& x, const Element<T>& y, const Element<T>& z) {
  return mul(mul(x, y), z) - mul(x, mul(y, z));
}

template <class T>
T dot(const Element<T>& x, const Element<T>& y) {
  require_same_algebra(x, y);
  T s = ScalarTraits<T>::zero();
  for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

template <class T>
T distance_sq(const Element<T>& x, const Element<T>& y) {
  return norm_sq(x - y);
}

FloatElement to_float(const ExactElement& x);
FloatElement to_float(const SurdElement& x);
inline FloatElement to_float(const FloatElement& x) { return x; }
ExactElement to_exact(const FloatElement& x);  // exact binary values
SurdElement to_surd(const ExactElement& x);

// Element whose backend is chosen at run time.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(ExactElement e) : v_(std::move(e)) {}  // NOLINT(google-explicit-constructor)
  AlgebraElement(FloatElement e) : v_(std::move(e)) {}  // NOLINT(google-explicit-constructor)

  Backend backend() const { return v_.index() == 0 ? Backend::Exact : Backend::Float; }
  Algebra algebra() const;
  bool is_exact() const { return v_.index() == 0; }
  const ExactElement& exact() const;
  const FloatElement& as_float() const;
  FloatElement to_float() const;
  AlgebraElement with_backend(Backend b) const;

  const std::variant<ExactElement, FloatElement>& value() const { return v_; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.v_ == b.v_; }

 private:
  std::variant<ExactElement, FloatElement> v_;
};

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement conj(const AlgebraElement& x);
AlgebraElement inv(const AlgebraElement& x);
AlgebraElement quotient(const AlgebraElement& p, const AlgebraElement& q);
std::variant<Rational, double> norm_sq(const AlgebraElement& x);
std::variant<Rational, double> re(const AlgebraElement& x);

}  // namespace cfrac
