#include "cfrac/linalg.hpp"

#include <cmath>
#include <utility>

#include "cfrac/errors.hpp"

namespace cfrac {

DMatrix to_double(const QMatrix& m) {
  DMatrix d(m.rows(), m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).get_d();
  return d;
}

RrefResult rref(QMatrix m) {
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational piv = m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= piv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(std::move(aug));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::optional<SolveResult> solve(const QMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  SolveResult s;
  s.x.assign(a.cols(), Rational(0));
  s.unique = r.pivots.size() == a.cols();
  for (std::size_t i = 0; i < r.pivots.size(); ++i) s.x[r.pivots[i]] = r.reduced(i, a.cols());
  return s;
}

QMatrix null_space(const QMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  QMatrix ns(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    ns(free[f], f) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) ns(r.pivots[i], f) = -r.reduced(i, free[f]);
  }
  return ns;
}

std::optional<DMatrix> inverse(const DMatrix& m) {
  const std::size_t n = m.rows();
  DMatrix a = m, inv = DMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::fabs(a(i, col)) > std::fabs(a(p, col))) p = i;
    if (std::fabs(a(p, col)) < 1e-300) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(col, j));
      std::swap(inv(p, j), inv(col, j));
    }
    double piv = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= piv;
      inv(col, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      double f = a(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<double> solve_least_squares(const DMatrix& a, const std::vector<double>& b) {
  // Normal equations.
  DMatrix at = a.transpose();
  DMatrix ata = at * a;
  auto inv = inverse(ata);
  if (!inv) throw Error("rank-deficient least squares system");
  return (*inv) * (at * b);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_sq(const std::vector<double>& a) { return dot(a, a); }

LllResult lll_reduce(const DMatrix& basis, double delta) {
  const std::size_t n = basis.cols();
  std::vector<std::vector<double>> b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = basis.column(j);
  Matrix<long> t = Matrix<long>::identity(n);
  auto gso = [&](std::vector<std::vector<double>>& bs, std::vector<std::vector<double>>& mu) {
    bs = b;
    mu.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        double d = norm_sq(bs[j]);
        mu[i][j] = d > 0 ? dot(b[i], bs[j]) / d : 0.0;
        for (std::size_t k = 0; k < bs[i].size(); ++k) bs[i][k] -= mu[i][j] * bs[j][k];
      }
    }
  };
  std::vector<std::vector<double>> bs, mu;
  gso(bs, mu);
  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < n && guard++ < 100000) {
    for (std::size_t jj = k; jj-- > 0;) {
      double q = std::round(mu[k][jj]);
      if (q != 0) {
        for (std::size_t r = 0; r < b[k].size(); ++r) b[k][r] -= q * b[jj][r];
        for (std::size_t r = 0; r < n; ++r) t(r, k) -= static_cast<long>(q) * t(r, jj);
        gso(bs, mu);
      }
    }
    if (norm_sq(bs[k]) >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm_sq(bs[k - 1])) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(t(r, k), t(r, k - 1));
      gso(bs, mu);
      k = k > 1 ? k - 1 : 1;
    }
  }
  LllResult out;
  out.reduced = DMatrix(basis.rows(), n);
  for (std::size_t j = 0; j < n; ++j) out.reduced.set_column(j, b[j]);
  out.transform = std::move(t);
  return out;
}

}  // namespace cfrac
