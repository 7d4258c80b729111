#include "cfrac/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cfrac/errors.hpp"
#include "cfrac/lattice.hpp"

namespace cfrac {

namespace {

Rational qdot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector qsub(const QVector& a, const QVector& b) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector qadd(const QVector& a, const QVector& b) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

DVector to_dvec(const QVector& a) {
  DVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].get_d();
  return r;
}

// Nonzero rows of rref([A | b]); nullopt when inconsistent.
std::optional<QMatrix> canonical_hull(const QMatrix& aug) {
  const std::size_t n = aug.cols() - 1;
  if (aug.rows() == 0) return QMatrix(0, n + 1);
  RrefResult r = rref(aug);
  for (auto p : r.pivots)
    if (p == n) return std::nullopt;
  QMatrix h(r.pivots.size(), n + 1);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j <= n; ++j) h(i, j) = r.reduced(i, j);
  return h;
}

QMatrix stack(const std::vector<const QMatrix*>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (auto* p : parts) rows += p->rows();
  QMatrix m(rows, cols);
  std::size_t at = 0;
  for (auto* p : parts)
    for (std::size_t i = 0; i < p->rows(); ++i, ++at)
      for (std::size_t j = 0; j < cols; ++j) m(at, j) = (*p)(i, j);
  return m;
}

bool in_hull(const QVector& x, const QMatrix& h) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += h(i, j) * x[j];
    if (s != h(i, n)) return false;
  }
  return true;
}

// Orthogonal projection of c onto {A x = b} (A of full row rank).
QVector project(const QVector& c, const QMatrix& h) {
  if (h.rows() == 0) return c;
  const std::size_t n = c.size(), m = h.rows();
  QMatrix A(m, n);
  QVector res(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      A(i, j) = h(i, j);
      s += h(i, j) * c[j];
    }
    res[i] = s - h(i, n);
  }
  QMatrix G = A * A.transpose();
  auto y = solve(G, res);
  if (!y) throw Error("singular Gram matrix in hull projection");
  QVector p = c;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) p[j] -= A(i, j) * y->x[i];
  return p;
}

Surd sqrt_rational(const Rational& q) {
  if (q < 0) throw Error("square root of a negative rational");
  if (q == 0) return Surd(0);
  mpz_class m = q.get_num() * q.get_den();
  if (!m.fits_ulong_p()) throw Error("radicand too large for an exact surd");
  Rational coeff(mpz_class(1), q.get_den());
  return Surd::sqrt_of(m.get_ui(), coeff);
}

std::string surd_key(const std::vector<Surd>& p) {
  std::string s;
  for (const auto& c : p) s += c.to_string() + ",";
  return s;
}

}  // namespace

SpherePiece SpherePiece::unit_sphere(std::size_t n) {
  SpherePiece s;
  s.center_.assign(n, Rational(0));
  s.radius_sq_ = 1;
  s.hull_ = QMatrix(0, n + 1);
  s.build_float();
  return s;
}

SpherePiece SpherePiece::point(QVector p) {
  const std::size_t n = p.size();
  SpherePiece s;
  s.hull_ = QMatrix(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    s.hull_(i, i) = 1;
    s.hull_(i, n) = p[i];
  }
  s.center_ = std::move(p);
  s.radius_sq_ = 0;
  s.build_float();
  return s;
}

SpherePiece SpherePiece::sphere(QVector center, Rational radius_sq, const QMatrix& hull_aug) {
  if (radius_sq < 0) throw InvalidConfiguration("negative radius^2");
  if (radius_sq == 0) return point(std::move(center));
  if (hull_aug.cols() != center.size() + 1) throw InvalidConfiguration("hull width does not match the center");
  auto h = canonical_hull(hull_aug);
  if (!h) throw InvalidConfiguration("inconsistent affine hull");
  if (!in_hull(center, *h)) throw InvalidConfiguration("sphere center is not in its hull");
  if (h->rows() >= center.size()) throw InvalidConfiguration("a sphere of positive radius needs a hull of dimension >= 1");
  SpherePiece s;
  s.center_ = std::move(center);
  s.radius_sq_ = std::move(radius_sq);
  s.hull_ = std::move(*h);
  s.build_float();
  return s;
}

void SpherePiece::build_float() {
  center_f_ = to_dvec(center_);
  directions_.clear();
  if (kind() == PieceKind::Point) return;
  const std::size_t n = ambient();
  QMatrix A(hull_.rows(), n);
  for (std::size_t i = 0; i < hull_.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = hull_(i, j);
  QMatrix ns = hull_.rows() == 0 ? QMatrix::identity(n) : null_space(A);
  for (std::size_t f = 0; f < ns.cols(); ++f) {
    DVector v = to_dvec(ns.column(f));
    for (const auto& e : directions_) {
      double d = cfrac::dot(v, e);
      for (std::size_t j = 0; j < n; ++j) v[j] -= d * e[j];
    }
    double len = std::sqrt(cfrac::norm_sq(v));
    for (auto& x : v) x /= len;
    directions_.push_back(std::move(v));
  }
}

int SpherePiece::dimension() const {
  if (kind() == PieceKind::Point) return 0;
  return static_cast<int>(hull_dim()) - 1;
}

double SpherePiece::radius() const { return std::sqrt(radius_sq_.get_d()); }

SpherePiece SpherePiece::translated(const QVector& gamma) const {
  SpherePiece s = *this;
  s.center_ = qadd(center_, gamma);
  const std::size_t n = ambient();
  for (std::size_t i = 0; i < hull_.rows(); ++i) {
    Rational t = 0;
    for (std::size_t j = 0; j < n; ++j) t += hull_(i, j) * gamma[j];
    s.hull_(i, n) += t;
  }
  s.center_f_ = to_dvec(s.center_);
  return s;
}

SpherePiece SpherePiece::transformed(const QMatrix& M) const {
  const std::size_t n = ambient();
  QVector c = M * center_;
  if (kind() == PieceKind::Point) return point(std::move(c));
  QMatrix A(hull_.rows(), n);
  for (std::size_t i = 0; i < hull_.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = hull_(i, j);
  QMatrix AM = A * M.transpose();
  QMatrix aug(hull_.rows(), n + 1);
  for (std::size_t i = 0; i < hull_.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = AM(i, j);
    aug(i, n) = hull_(i, n);
  }
  return sphere(std::move(c), radius_sq_, aug);
}

std::vector<std::vector<Surd>> SpherePiece::exact_points() const {
  std::vector<std::vector<Surd>> out;
  if (kind() == PieceKind::Point) {
    std::vector<Surd> p;
    for (const auto& c : center_) p.emplace_back(c);
    out.push_back(std::move(p));
    return out;
  }
  if (hull_dim() != 1) return out;
  const std::size_t n = ambient();
  QMatrix A(hull_.rows(), n);
  for (std::size_t i = 0; i < hull_.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = hull_(i, j);
  QVector d = null_space(A).column(0);
  Surd t = sqrt_rational(radius_sq_ / qdot(d, d));
  for (int sign : {1, -1}) {
    std::vector<Surd> p;
    for (std::size_t j = 0; j < n; ++j) p.push_back(Surd(center_[j]) + Surd(Rational(sign) * d[j]) * t);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<DVector> SpherePiece::sample(std::size_t count, std::mt19937_64& rng) const {
  std::vector<DVector> out;
  std::normal_distribution<double> g(0.0, 1.0);
  const double r = radius();
  for (std::size_t s = 0; s < count; ++s) {
    DVector x = center_f_;
    if (kind() == PieceKind::Sphere) {
      DVector u(directions_.size());
      double len = 0;
      while (len < 1e-12) {
        for (auto& c : u) c = g(rng);
        len = std::sqrt(cfrac::norm_sq(u));
      }
      for (std::size_t i = 0; i < directions_.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += r * u[i] / len * directions_[i][j];
    }
    out.push_back(std::move(x));
  }
  return out;
}

double SpherePiece::distance(const DVector& x) const {
  const std::size_t n = x.size();
  DVector w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = x[j] - center_f_[j];
  if (kind() == PieceKind::Point) return std::sqrt(cfrac::norm_sq(w));
  DVector perp = w;
  double par = 0;
  for (const auto& e : directions_) {
    double c = cfrac::dot(w, e);
    par += c * c;
    for (std::size_t j = 0; j < n; ++j) perp[j] -= c * e[j];
  }
  double radial = std::sqrt(par) - radius();
  return std::sqrt(cfrac::norm_sq(perp) + radial * radial);
}

DVector SpherePiece::closest_point(const DVector& x) const {
  if (kind() == PieceKind::Point) return center_f_;
  DVector w(x.size(), 0.0);
  for (const auto& e : directions_) {
    double c = 0;
    for (std::size_t j = 0; j < x.size(); ++j) c += (x[j] - center_f_[j]) * e[j];
    for (std::size_t j = 0; j < x.size(); ++j) w[j] += c * e[j];
  }
  double len = std::sqrt(cfrac::norm_sq(w));
  if (len < 1e-300) w = directions_.front(), len = 1;
  DVector p = center_f_;
  for (std::size_t j = 0; j < x.size(); ++j) p[j] += radius() * w[j] / len;
  return p;
}

std::string SpherePiece::key() const {
  std::string s;
  for (const auto& c : center_) s += to_string(c) + ",";
  s += "|" + to_string(radius_sq_) + "|";
  for (std::size_t i = 0; i < hull_.rows(); ++i)
    for (std::size_t j = 0; j < hull_.cols(); ++j) s += to_string(hull_(i, j)) + ",";
  return s;
}

std::string SpherePiece::describe() const {
  std::ostringstream os;
  auto vec = [&](const QVector& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
    os << ")";
  };
  if (kind() == PieceKind::Point) {
    os << "point ";
    vec(center_);
    return os.str();
  }
  int d = dimension();
  os << (d == 0 ? "0-sphere" : d == 1 ? "circle" : std::to_string(d) + "-sphere") << " center ";
  vec(center_);
  os << " r^2 " << to_string(radius_sq_);
  const std::size_t n = ambient();
  for (std::size_t i = 0; i < hull_.rows(); ++i) {
    os << (i ? ", " : " on ");
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (hull_(i, j) == 0) continue;
      os << (first ? "" : " + ") << to_string(hull_(i, j)) << "*x" << j + 1;
      first = false;
    }
    os << " = " << to_string(hull_(i, n));
  }
  return os.str();
}

const char* intersection_kind_name(IntersectionKind k) {
  switch (k) {
    case IntersectionKind::Empty: return "empty";
    case IntersectionKind::Point: return "point";
    case IntersectionKind::Sphere: return "sphere";
    case IntersectionKind::Same: return "same";
  }
  return "?";
}

Intersection sphere_intersect(const SpherePiece& A, const SpherePiece& B) {
  const std::size_t n = A.ambient();
  if (B.ambient() != n) throw DimensionMismatch("pieces live in different dimensions");
  Intersection out;
  QMatrix radical(0, n + 1);
  if (A.center() == B.center()) {
    if (A.radius_sq() != B.radius_sq()) return out;
  } else {
    radical = QMatrix(1, n + 1);
    for (std::size_t j = 0; j < n; ++j) radical(0, j) = 2 * (B.center()[j] - A.center()[j]);
    radical(0, n) = A.radius_sq() - B.radius_sq() + qdot(B.center(), B.center()) - qdot(A.center(), A.center());
  }
  auto E = canonical_hull(stack({&A.hull(), &B.hull(), &radical}, n + 1));
  if (!E) return out;
  QVector p = project(A.center(), *E);
  QVector diff = qsub(p, A.center());
  Rational r2 = A.radius_sq() - qdot(diff, diff);
  if (r2 < 0) return out;
  if (r2 == 0) {
    out.piece = SpherePiece::point(std::move(p));
  } else {
    if (E->rows() == n) return out;
    out.piece = SpherePiece::sphere(std::move(p), r2, *E);
  }
  out.kind = out.piece == A ? IntersectionKind::Same
             : out.piece.kind() == PieceKind::Point ? IntersectionKind::Point
                                                     : IntersectionKind::Sphere;
  return out;
}

std::vector<QVector> BoundaryLattice::points_within(const DVector& center, double radius) const {
  const std::size_t n = dim();
  DMatrix Bf = to_double(basis);
  auto Binv = inverse(Bf);
  if (!Binv) throw InvalidConfiguration("degenerate boundary lattice");
  DVector z0 = (*Binv) * center;
  std::vector<long> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < n; ++j) row += (*Binv)(i, j) * (*Binv)(i, j);
    double w = radius * std::sqrt(row);
    lo[i] = static_cast<long>(std::floor(z0[i] - w));
    hi[i] = static_cast<long>(std::ceil(z0[i] + w));
  }
  std::vector<QVector> out;
  std::vector<long> z(lo);
  while (true) {
    QVector zq(n);
    for (std::size_t i = 0; i < n; ++i) zq[i] = z[i];
    QVector g = basis * zq;
    double d2 = 0;
    for (std::size_t i = 0; i < n; ++i) d2 += (g[i].get_d() - center[i]) * (g[i].get_d() - center[i]);
    if (d2 <= radius * radius) out.push_back(std::move(g));
    std::size_t i = 0;
    while (i < n && ++z[i] > hi[i]) z[i] = lo[i], ++i;
    if (i == n) break;
  }
  return out;
}

BoundaryLattice boundary_lattice(const std::string& name) {
  auto diag = [](std::size_t n) { return QMatrix::identity(n); };
  if (name == "Z1" || name == "Z") return {"Z1", diag(1)};
  if (name == "Z2" || name == "Zi") return {"Z2", diag(2)};
  if (name == "Z3") return {"Z3", diag(3)};
  if (name == "Zi_times_1pi") {
    QMatrix b(2, 2);
    b(0, 0) = 1, b(0, 1) = -1, b(1, 0) = 1, b(1, 1) = 1;
    return {"Zi_times_1pi", b};
  }
  throw UnknownName("unknown boundary lattice '" + name + "' (Z1, Z2, Z3, Zi_times_1pi)");
}

Decomposition build_decomposition(const BoundaryLattice& lattice, std::size_t max_level) {
  Decomposition d{lattice, {}};
  Level base;
  base.pieces.push_back(SpherePiece::unit_sphere(lattice.dim()));
  base.provenance.push_back({});
  d.levels.push_back(std::move(base));
  for (std::size_t j = 0; j < max_level; ++j) {
    const auto& cur = d.levels.back().pieces;
    Level next;
    std::unordered_map<std::string, std::size_t> index;
    std::set<std::string> meeting;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const DVector ck = to_dvec(cur[k].center());
      for (std::size_t k2 = 0; k2 < cur.size(); ++k2) {
        const DVector ck2 = to_dvec(cur[k2].center());
        DVector v(ck.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = ck[i] - ck2[i];
        double R = cur[k].radius() + cur[k2].radius() + 1e-9;
        for (const auto& g : lattice.points_within(v, R)) {
          SpherePiece B = cur[k2].translated(g);
          Intersection I = sphere_intersect(cur[k], B);
          if (I.kind == IntersectionKind::Empty || I.kind == IntersectionKind::Same) continue;
          meeting.insert(B.key());
          std::string key = I.piece.key();
          auto it = index.find(key);
          if (it != index.end()) {
            ++next.provenance[it->second].multiplicity;
            continue;
          }
          index.emplace(key, next.pieces.size());
          next.pieces.push_back(std::move(I.piece));
          next.provenance.push_back({k, k2, g, 1});
        }
      }
    }
    next.intersectors = meeting.size();
    bool empty = next.pieces.empty();
    d.levels.push_back(std::move(next));
    if (empty) break;
  }
  return d;
}

std::vector<std::vector<Surd>> level_points(const Level& level) {
  std::vector<std::vector<Surd>> out;
  std::set<std::string> seen;
  for (const auto& p : level.pieces)
    for (auto& x : p.exact_points())
      if (seen.insert(surd_key(x)).second) out.push_back(std::move(x));
  return out;
}

Census census(const Level& level) {
  Census c;
  for (const auto& p : level.pieces) {
    if (p.kind() == PieceKind::Point) {
      ++c.points;
      continue;
    }
    ++c.spheres_by_dim[p.dimension()];
    ++c.radius_sq[p.radius_sq()];
  }
  c.distinct_points = level_points(level).size();
  return c;
}

std::string Census::summary() const {
  std::ostringstream os;
  os << points << " points";
  for (const auto& [d, k] : spheres_by_dim) os << ", " << k << " " << (d == 1 ? "circles" : std::to_string(d) + "-spheres");
  if (!radius_sq.empty()) {
    os << ", radius^2 {";
    bool first = true;
    for (const auto& [r, k] : radius_sq) {
      os << (first ? "" : ", ") << to_string(r) << " x" << k;
      first = false;
    }
    os << "}";
  }
  os << ", " << distinct_points << " distinct points";
  return os.str();
}

double distance_to_pieces(const DVector& x, const std::vector<SpherePiece>& pieces) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pieces) best = std::min(best, p.distance(x));
  return best;
}

bool voronoi_membership(const DVector& x, const DVector& a, const std::vector<SpherePiece>& pieces, double r) {
  double dxa = 0;
  for (std::size_t i = 0; i < x.size(); ++i) dxa += (x[i] - a[i]) * (x[i] - a[i]);
  dxa = std::sqrt(dxa);
  return dxa < r && dxa <= distance_to_pieces(x, pieces) + 1e-12;
}

CheckResult verify_nesting(const Decomposition& d, std::size_t samples, unsigned long seed, double tol) {
  CheckResult res;
  std::mt19937_64 rng(seed);
  for (std::size_t j = 1; j < d.levels.size(); ++j)
    for (const auto& p : d.levels[j].pieces)
      for (const auto& x : p.sample(samples, rng)) {
        double to_prev = distance_to_pieces(x, d.levels[j - 1].pieces);
        double off_sphere = std::fabs(std::sqrt(cfrac::norm_sq(x)) - 1.0);
        double worst = std::max(to_prev, off_sphere);
        res.worst_relative = std::max(res.worst_relative, worst);
        if (worst > tol && res.ok) {
          res.ok = false;
          res.failed_at = j;
          res.detail = "sample of " + p.describe() + " is " + float_to_string(worst) + " away from S_" +
                       std::to_string(j - 1);
        }
      }
  return res;
}

CheckResult verify_symmetry(const Decomposition& d, const QMatrix& M) {
  CheckResult res;
  for (std::size_t j = 0; j < d.levels.size(); ++j) {
    std::set<std::string> keys;
    for (const auto& p : d.levels[j].pieces) keys.insert(p.key());
    for (const auto& p : d.levels[j].pieces) {
      SpherePiece q = p.transformed(M);
      if (!keys.count(q.key())) {
        res.ok = false;
        res.failed_at = j;
        res.detail = "image of " + p.describe() + " is not a piece of S_" + std::to_string(j);
        return res;
      }
    }
  }
  return res;
}

CheckResult verify_dimension_drop(const Decomposition& d) {
  CheckResult res;
  const int n = static_cast<int>(d.lattice.dim());
  for (std::size_t j = 0; j < d.levels.size(); ++j)
    for (const auto& p : d.levels[j].pieces) {
      if (p.kind() == PieceKind::Point) continue;
      if (p.dimension() > n - 1 - static_cast<int>(j)) {
        res.ok = false;
        res.failed_at = j;
        res.detail = p.describe() + " at level " + std::to_string(j);
        return res;
      }
    }
  return res;
}

namespace {

FloatElement lattice_point(const Order& L, const Coords& c) { return L.point(c); }

std::vector<FloatElement> sphere_translates(const Order& L) {
  std::vector<FloatElement> out;
  FloatElement zero(L.algebra());
  for (const auto& c : points_within(L, zero, 2.0 + 1e-9)) {
    FloatElement g = lattice_point(L, c);
    if (norm(g) > 1e-12) out.push_back(g);
  }
  return out;
}

}  // namespace

std::size_t default_trap_depth(const Order& lattice) { return 2 * sphere_translates(lattice).size(); }

TrapReport trap_expansion_check(const FloatElement& x0, const FloatElement& a0, const Inversion& iota,
                                const Order& L, std::size_t depth, double tol) {
  TrapReport rep;
  if (std::fabs(norm(a0) - 1.0) > 1e-9) throw InvalidConfiguration("a must lie on the unit sphere");
  if (norm(x0) >= 1.0) throw InvalidConfiguration("x must lie in the open unit ball");
  FloatElement x = x0, a = a0;
  const double d0 = norm(x - a);
  double predicted = d0, prev = d0;
  rep.distances.push_back(d0);
  rep.predicted.push_back(d0);
  rep.stop_reason = "depth reached";
  for (std::size_t i = 0; i < depth; ++i) {
    const double nx = norm(x);
    if (nx >= 1.0) {
      rep.stop_reason = "x orbit left the unit ball at step " + std::to_string(i);
      break;
    }
    FloatElement ix = iota.apply(x), ia = iota.apply(a);
    std::optional<FloatElement> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& c : points_within(L, ia, 1.0 + 1e-7)) {
      FloatElement g = lattice_point(L, c);
      if (norm(g) < 1e-12) continue;
      if (std::fabs(norm(ia - g) - 1.0) > 1e-7) continue;
      double dx = norm(ix - g);
      if (dx < best_d) best_d = dx, best = g;
    }
    if (!best) {
      rep.stop_reason = "a orbit left the sphere at step " + std::to_string(i);
      break;
    }
    x = ix - *best;
    a = ia - *best;
    rep.digits.push_back(*best);
    predicted /= nx;
    const double di = norm(x - a);
    rep.distances.push_back(di);
    rep.predicted.push_back(predicted);
    double rel = std::fabs(di - predicted) / std::max(predicted, 1e-300);
    rep.worst_relative = std::max(rep.worst_relative, rel);
    if (rel > tol) rep.identity_ok = false;
    if (!(di > prev)) rep.strictly_increasing = false;
    prev = di;
    ++rep.steps;
  }
  return rep;
}

ProximityReport proximity_estimate(const SpherePiece& A, const SpherePiece& B, const std::vector<double>& epsilons,
                                   std::size_t samples, unsigned long seed) {
  ProximityReport rep;
  Intersection I = sphere_intersect(A, B);
  rep.relation = I.kind;
  const SpherePiece& target = I.kind == IntersectionKind::Same ? A : I.piece;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const std::size_t n = A.ambient();
  const int scales = 12;
  for (double eps : epsilons) {
    ProximityRow row{eps, 0.0, 0};
    if (I.kind != IntersectionKind::Empty) {
      const double rho_max = 4 * std::sqrt(eps) + 4 * eps, rho_min = eps / 2;
      auto seeds = target.sample(samples, rng);
      for (std::size_t s = 0; s < samples; ++s) {
        double t = static_cast<double>(s % scales) / (scales - 1);
        double rho = rho_max * std::pow(rho_min / rho_max, t);
        DVector u(n);
        double len = 0;
        while (len < 1e-12) {
          for (auto& c : u) c = g(rng);
          len = std::sqrt(cfrac::norm_sq(u));
        }
        double r = rho * std::pow(U(rng), 1.0 / static_cast<double>(n));
        DVector x = seeds[s];
        for (std::size_t j = 0; j < n; ++j) x[j] += r * u[j] / len;
        if (A.distance(x) < eps && B.distance(x) < eps) {
          ++row.accepted;
          row.tau = std::max(row.tau, target.distance(x));
        }
      }
    }
    rep.rows.push_back(row);
  }
  double first_ratio = 0, last_ratio = 0;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    double ratio = r.tau / r.epsilon;
    rep.linear_constant = std::max(rep.linear_constant, ratio);
    if (i == 0) first_ratio = ratio;
    last_ratio = ratio;
    if (i > 0 && r.tau > rep.rows[i - 1].tau * (1 + 1e-12) && r.epsilon < rep.rows[i - 1].epsilon) rep.monotone = false;
  }
  if (!rep.rows.empty()) {
    const auto& last = rep.rows.back();
    rep.tends_to_zero = last.tau <= std::max(rep.rows.front().tau, 1e-300) * 0.5 || last.tau < 1e-2 ||
                        I.kind == IntersectionKind::Empty;
    rep.linear = last_ratio <= 2 * std::max(first_ratio, 1.0);
  }
  return rep;
}

}  // namespace cfrac
