#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cfrac/rational.hpp"

namespace cfrac {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : r_(rows), c_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using DMatrix = Matrix<double>;

template <class T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
  Matrix<T> r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& x, const std::vector<T>& v) {
  std::vector<T> r(x.rows(), T(0));
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r[i] += x(i, j) * v[j];
  return r;
}

DMatrix to_double(const QMatrix& m);

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form, exact.
RrefResult rref(QMatrix m);
std::size_t rank(const QMatrix& m);
Rational determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);

// Solves A x = b exactly.  Returns nullopt when inconsistent; when the
// solution is not unique the free variables are set to zero and `unique`
// is cleared.
struct SolveResult {
  std::vector<Rational> x;
  bool unique = true;
};
std::optional<SolveResult> solve(const QMatrix& a, const std::vector<Rational>& b);

// Basis of the null space of m (columns of the result).
QMatrix null_space(const QMatrix& m);

// Float helpers.
std::optional<DMatrix> inverse(const DMatrix& m);
std::vector<double> solve_least_squares(const DMatrix& a, const std::vector<double>& b);

// LLL reduction (delta = 0.99) of the columns of `basis`.  On return the
// reduced basis equals basis * transform, with transform unimodular.
struct LllResult {
  DMatrix reduced;
  Matrix<long> transform;
};
LllResult lll_reduce(const DMatrix& basis, double delta = 0.99);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm_sq(const std::vector<double>& a);

}  // namespace cfrac
