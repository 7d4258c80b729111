#include "cfrac/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "cfrac/errors.hpp"

namespace cfrac {

namespace {

struct Gso {
  std::vector<std::vector<double>> bs;   // orthogonalised vectors
  std::vector<double> bs_norm_sq;
  std::vector<std::vector<double>> mu;   // mu[j][i] = <b_j, bs_i> / |bs_i|^2
};

Gso gram_schmidt(const DMatrix& basis) {
  const std::size_t r = basis.cols();
  Gso g;
  g.bs.resize(r);
  g.bs_norm_sq.resize(r);
  g.mu.assign(r, std::vector<double>(r, 0.0));
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<double> b = basis.column(j);
    g.bs[j] = b;
    for (std::size_t i = 0; i < j; ++i) {
      g.mu[j][i] = dot(b, g.bs[i]) / g.bs_norm_sq[i];
      for (std::size_t k = 0; k < b.size(); ++k) g.bs[j][k] -= g.mu[j][i] * g.bs[i][k];
    }
    g.bs_norm_sq[j] = norm_sq(g.bs[j]);
  }
  return g;
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Order::Order(std::string name, Algebra algebra, std::vector<SurdElement> generators)
    : name_(std::move(name)), algebra_(algebra), generators_(std::move(generators)) {
  const std::size_t d = dimension(algebra_), r = generators_.size();
  if (r == 0 || r > d) throw InvalidConfiguration("order '" + name_ + "' needs between 1 and d generators");
  for (const auto& g : generators_) {
    if (g.algebra() != algebra_) throw AlgebraMismatch("generator of order '" + name_ + "' in wrong algebra");
    for (const auto& c : g.coeffs()) rational_ = rational_ && c.is_rational();
  }
  basis_f_ = DMatrix(d, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < d; ++i) basis_f_(i, j) = generators_[j][i].to_double();
  if (rational_) {
    basis_ = QMatrix(d, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < d; ++i) basis_(i, j) = generators_[j][i].rational_part();
  }
  std::set<std::pair<std::size_t, std::uint64_t>> rows;
  for (const auto& g : generators_)
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& [m, q] : g[i].terms()) rows.insert({i, m});
  for (std::size_t i = 0; i < d; ++i) rows.insert({i, 1});
  expanded_rows_.assign(rows.begin(), rows.end());
  expanded_ = QMatrix(expanded_rows_.size(), r);
  for (std::size_t k = 0; k < expanded_rows_.size(); ++k)
    for (std::size_t j = 0; j < r; ++j)
      expanded_(k, j) = generators_[j][expanded_rows_[k].first].coefficient(expanded_rows_[k].second);
  if (cfrac::rank(expanded_) != r)
    throw InvalidConfiguration("generators of order '" + name_ + "' are linearly dependent");

  LllResult lll = lll_reduce(basis_f_);
  reduced_ = std::move(lll.reduced);
  transform_ = std::move(lll.transform);

  is_ring_ = true;
  for (std::size_t i = 0; i < r && is_ring_; ++i)
    for (std::size_t j = 0; j < r && is_ring_; ++j)
      is_ring_ = cfrac::contains(*this, mul(generators_[i], generators_[j]));
  conjugation_closed_ = true;
  for (std::size_t i = 0; i < r && conjugation_closed_; ++i)
    conjugation_closed_ = cfrac::contains(*this, conj(generators_[i]));
  contains_one_ = cfrac::contains(*this, SurdElement::one(algebra_));
}

const QMatrix& Order::basis() const {
  if (!rational_) throw UnsupportedBackend("order '" + name_ + "' has irrational generators");
  return basis_;
}

std::optional<std::vector<Rational>> Order::rational_coordinates(const SurdElement& x) const {
  if (x.algebra() != algebra_) throw AlgebraMismatch("element and order '" + name_ + "' in different algebras");
  std::vector<Rational> rhs(expanded_rows_.size());
  std::size_t matched = 0;
  for (std::size_t k = 0; k < expanded_rows_.size(); ++k) {
    rhs[k] = x[expanded_rows_[k].first].coefficient(expanded_rows_[k].second);
    if (rhs[k] != 0) ++matched;
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) total += x[i].terms().size();
  if (matched != total) return std::nullopt;  // radicand outside the span
  auto s = solve(expanded_, rhs);
  if (!s) return std::nullopt;
  return s->x;
}

std::optional<std::vector<Rational>> Order::rational_coordinates(const ExactElement& x) const {
  if (x.algebra() != algebra_) throw AlgebraMismatch("element and order '" + name_ + "' in different algebras");
  if (rational_) {
    auto s = solve(basis_, x.coeffs());
    if (!s) return std::nullopt;
    return s->x;
  }
  return rational_coordinates(to_surd(x));
}

FloatElement Order::point(const Coords& c) const {
  FloatElement p(algebra_);
  for (std::size_t j = 0; j < rank(); ++j)
    if (c[j] != 0)
      for (std::size_t i = 0; i < dim(); ++i) p[i] += static_cast<double>(c[j]) * basis_f_(i, j);
  return p;
}

ExactElement Order::exact_point(const Coords& c) const {
  const QMatrix& b = basis();
  ExactElement p(algebra_);
  for (std::size_t j = 0; j < rank(); ++j)
    if (c[j] != 0)
      for (std::size_t i = 0; i < dim(); ++i) p[i] += Rational(c[j]) * b(i, j);
  return p;
}

SurdElement Order::surd_point(const Coords& c) const {
  SurdElement p(algebra_);
  for (std::size_t j = 0; j < rank(); ++j)
    if (c[j] != 0)
      for (std::size_t i = 0; i < dim(); ++i) p[i] += Surd(Rational(c[j])) * generators_[j][i];
  return p;
}

namespace {

std::optional<Coords> to_integer(const std::optional<std::vector<Rational>>& q) {
  if (!q) return std::nullopt;
  Coords c;
  for (const auto& v : *q) {
    if (!is_integer(v)) return std::nullopt;
    if (!v.get_num().fits_slong_p()) throw Error("lattice coordinate out of range");
    c.push_back(v.get_num().get_si());
  }
  return c;
}

}  // namespace

std::optional<Coords> integer_coordinates(const Order& L, const ExactElement& x) {
  return to_integer(L.rational_coordinates(x));
}

std::optional<Coords> integer_coordinates(const Order& L, const SurdElement& x) {
  return to_integer(L.rational_coordinates(x));
}

bool contains(const Order& L, const ExactElement& x) { return integer_coordinates(L, x).has_value(); }
bool contains(const Order& L, const SurdElement& x) { return integer_coordinates(L, x).has_value(); }

bool contains(const Order& L, const AlgebraElement& x) {
  if (!x.is_exact()) throw UnsupportedBackend("lattice membership needs the exact backend");
  return contains(L, x.exact());
}

void for_each_point_within(const Order& L, const std::vector<double>& center, double radius,
                           const std::function<void(const Coords&, double)>& visit) {
  const DMatrix& B = L.reduced_basis();
  const std::size_t r = B.cols();
  const Gso g = gram_schmidt(B);
  std::vector<double> tau(r);
  double proj = 0;
  for (std::size_t i = 0; i < r; ++i) {
    tau[i] = dot(center, g.bs[i]) / g.bs_norm_sq[i];
    proj += tau[i] * tau[i] * g.bs_norm_sq[i];
  }
  const double perp = std::max(0.0, norm_sq(center) - proj);
  const double bound = radius * radius * (1 + 1e-9) + 1e-12 - perp;
  if (bound < 0) return;
  const Matrix<long>& T = L.reduction_transform();
  std::vector<long> z(r, 0);
  Coords orig(r, 0);
  std::function<void(std::size_t, double)> rec = [&](std::size_t level, double partial) {
    const std::size_t i = level - 1;
    double c = tau[i];
    for (std::size_t j = i + 1; j < r; ++j) c -= g.mu[j][i] * static_cast<double>(z[j]);
    const double rem = bound - partial;
    const double w = std::sqrt(std::max(0.0, rem / g.bs_norm_sq[i]));
    const long lo = static_cast<long>(std::ceil(c - w - 1e-12));
    const long hi = static_cast<long>(std::floor(c + w + 1e-12));
    for (long zi = lo; zi <= hi; ++zi) {
      const double t = static_cast<double>(zi) - c;
      const double np = partial + t * t * g.bs_norm_sq[i];
      if (np > bound) continue;
      z[i] = zi;
      if (i == 0) {
        for (std::size_t a = 0; a < r; ++a) {
          long s = 0;
          for (std::size_t b = 0; b < r; ++b) s += T(a, b) * z[b];
          orig[a] = s;
        }
        FloatElement p = L.point(orig);
        double dsq = 0;
        for (std::size_t k = 0; k < p.dim(); ++k) dsq += (p[k] - center[k]) * (p[k] - center[k]);
        visit(orig, dsq);
      } else {
        rec(level - 1, np);
      }
    }
    z[i] = 0;
  };
  rec(r, 0.0);
}

std::vector<Coords> points_within(const Order& L, const FloatElement& center, double radius) {
  std::vector<Coords> out;
  for_each_point_within(L, center.coeffs(), radius, [&](const Coords& c, double dsq) {
    if (dsq <= radius * radius * (1 + 1e-9) + 1e-12) out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Distance from `center` to the Babai nearest-plane point of the reduced basis.
double babai_distance(const Order& L, const std::vector<double>& center) {
  const DMatrix& B = L.reduced_basis();
  const std::size_t r = B.cols();
  const Gso g = gram_schmidt(B);
  std::vector<double> residual = center;
  for (std::size_t i = r; i-- > 0;) {
    double c = dot(residual, g.bs[i]) / g.bs_norm_sq[i];
    double zi = std::round(c);
    for (std::size_t k = 0; k < residual.size(); ++k) residual[k] -= zi * B(k, i);
  }
  return std::sqrt(norm_sq(residual));
}

}  // namespace

LatticePoint<Rational> nearest(const Order& L, const ExactElement& x) {
  if (!L.is_rational())
    throw UnsupportedBackend("exact nearest point needs an order with rational generators ('" + L.name() + "')");
  const FloatElement xf = to_float(x);
  const double rb = babai_distance(L, xf.coeffs());
  std::vector<std::pair<double, Coords>> cands;
  double best_f = INFINITY;
  for_each_point_within(L, xf.coeffs(), rb * (1 + 1e-7) + 1e-9, [&](const Coords& c, double dsq) {
    cands.emplace_back(dsq, c);
    best_f = std::min(best_f, dsq);
  });
  bool have = false;
  Rational best;
  std::vector<Rational> best_rem;
  LatticePoint<Rational> out;
  for (const auto& [dsq, c] : cands) {
    if (dsq > best_f + 1e-7 * (1 + best_f)) continue;
    ExactElement p = L.exact_point(c);
    ExactElement rem = x - p;
    Rational n = norm_sq(rem);
    if (!have || n < best || (n == best && lex_less(rem.coeffs(), best_rem))) {
      have = true;
      best = n;
      best_rem = rem.coeffs();
      out.coords = c;
      out.value = p;
    }
  }
  if (!have) throw Error("nearest-point search found no candidates");
  return out;
}

LatticePoint<double> nearest(const Order& L, const FloatElement& x) {
  const double rb = babai_distance(L, x.coeffs());
  bool have = false;
  double best = 0;
  FloatElement best_rem;
  LatticePoint<double> out;
  for_each_point_within(L, x.coeffs(), rb * (1 + 1e-7) + 1e-9, [&](const Coords& c, double) {
    FloatElement p = L.point(c);
    FloatElement rem = x - p;
    double n = norm_sq(rem);
    const double tol = 1e-12 * (1 + n);
    bool better = !have || n < best - tol;
    if (!better && have && std::fabs(n - best) <= tol) {
      for (std::size_t i = 0; i < rem.dim(); ++i) {
        if (std::fabs(rem[i] - best_rem[i]) <= 1e-12) continue;
        better = rem[i] < best_rem[i];
        break;
      }
    }
    if (better) {
      have = true;
      best = n;
      best_rem = rem;
      out.coords = c;
      out.value = p;
    }
  });
  if (!have) throw Error("nearest-point search found no candidates");
  return out;
}

AlgebraElement nearest(const Order& L, const AlgebraElement& x) {
  if (x.is_exact()) return AlgebraElement(nearest(L, x.exact()).value);
  return AlgebraElement(nearest(L, x.as_float()).value);
}

double shortest_norm_sq(const Order& L) {
  double bound = INFINITY;
  for (std::size_t j = 0; j < L.rank(); ++j) bound = std::min(bound, norm_sq(L.reduced_basis().column(j)));
  double best = INFINITY;
  std::vector<double> zero(L.dim(), 0.0);
  for_each_point_within(L, zero, std::sqrt(bound), [&](const Coords& c, double dsq) {
    bool nz = std::any_of(c.begin(), c.end(), [](long v) { return v != 0; });
    if (nz) best = std::min(best, dsq);
  });
  return best;
}

std::optional<Rational> exact_shortest_norm_sq(const Order& L) {
  if (!L.is_rational()) return std::nullopt;
  const double s = shortest_norm_sq(L);
  std::optional<Rational> best;
  std::vector<double> zero(L.dim(), 0.0);
  for_each_point_within(L, zero, std::sqrt(s) * (1 + 1e-6), [&](const Coords& c, double) {
    bool nz = std::any_of(c.begin(), c.end(), [](long v) { return v != 0; });
    if (!nz) return;
    Rational n = norm_sq(L.exact_point(c));
    if (!best || n < *best) best = n;
  });
  return best;
}

namespace {

double covering_bound(const Order& L) {
  const Gso g = gram_schmidt(L.reduced_basis());
  double s = 0;
  for (double v : g.bs_norm_sq) s += v;
  return 0.5 * std::sqrt(s);
}

std::vector<std::vector<double>> span_frame(const Order& L) {
  const Gso g = gram_schmidt(L.reduced_basis());
  std::vector<std::vector<double>> q;
  for (std::size_t i = 0; i < g.bs.size(); ++i) {
    std::vector<double> v = g.bs[i];
    double n = std::sqrt(g.bs_norm_sq[i]);
    for (auto& x : v) x /= n;
    q.push_back(v);
  }
  return q;
}

std::vector<double> to_frame(const std::vector<std::vector<double>>& q, const std::vector<double>& v) {
  std::vector<double> w(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) w[i] = dot(q[i], v);
  return w;
}

std::vector<double> from_frame(const std::vector<std::vector<double>>& q, const std::vector<double>& w) {
  std::vector<double> v(q[0].size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[i] * q[i][k];
  return v;
}

struct Halfspaces {
  std::vector<std::vector<double>> a;
  std::vector<double> b;
};

Halfspaces voronoi_halfspaces(const Order& L, const std::vector<std::vector<double>>& q) {
  Halfspaces h;
  for (const auto& c : relevant_vectors(L)) {
    std::vector<double> w = to_frame(q, L.point(c).coeffs());
    h.b.push_back(0.5 * norm_sq(w));
    h.a.push_back(std::move(w));
  }
  return h;
}

// Solves the square system a_i . x = b_i for the chosen rows.
std::optional<std::vector<double>> solve_rows(const Halfspaces& h, const std::vector<std::size_t>& rows) {
  const std::size_t n = rows.size();
  DMatrix m(n, n);
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = h.a[rows[i]][j];
    rhs[i] = h.b[rows[i]];
  }
  // Reject near-singular subsets.
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  double norm_inv = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) norm_inv = std::max(norm_inv, std::fabs((*inv)(i, j)));
  if (norm_inv > 1e8) return std::nullopt;
  return (*inv) * rhs;
}

bool feasible(const Halfspaces& h, const std::vector<double>& x, double tol) {
  for (std::size_t i = 0; i < h.a.size(); ++i)
    if (dot(h.a[i], x) > h.b[i] + tol) return false;
  return true;
}

// Maximises <u, x> over the polytope with a primal active-set walk started
// at the feasible point x.
std::vector<double> lp_walk(const Halfspaces& h, const std::vector<double>& u, std::vector<double> x,
                            std::vector<std::size_t>& active) {
  const std::size_t r = u.size();
  const double eps = 1e-11;
  for (int iter = 0; iter < 20000; ++iter) {
    // Orthonormal basis of the active normals.
    std::vector<std::vector<double>> qa;
    for (auto i : active) {
      std::vector<double> v = h.a[i];
      for (const auto& w : qa) {
        double c = dot(v, w);
        for (std::size_t k = 0; k < r; ++k) v[k] -= c * w[k];
      }
      double n = std::sqrt(norm_sq(v));
      for (auto& t : v) t /= n;
      qa.push_back(v);
    }
    std::vector<double> p = u;
    for (const auto& w : qa) {
      double c = dot(p, w);
      for (std::size_t k = 0; k < r; ++k) p[k] -= c * w[k];
    }
    if (norm_sq(p) > eps * eps * norm_sq(u)) {
      double tmin = INFINITY;
      std::size_t block = h.a.size();
      for (std::size_t i = 0; i < h.a.size(); ++i) {
        if (std::find(active.begin(), active.end(), i) != active.end()) continue;
        double ap = dot(h.a[i], p);
        if (ap <= eps) continue;
        double t = (h.b[i] - dot(h.a[i], x)) / ap;
        if (t < tmin - 1e-14) {
          tmin = t;
          block = i;
        }
      }
      if (block == h.a.size()) throw Error("unbounded Voronoi polytope");
      tmin = std::max(0.0, tmin);
      for (std::size_t k = 0; k < r; ++k) x[k] += tmin * p[k];
      active.push_back(block);
      continue;
    }
    // Multipliers u = sum lambda_i a_i over the active set.
    DMatrix A(r, active.size());
    for (std::size_t j = 0; j < active.size(); ++j)
      for (std::size_t k = 0; k < r; ++k) A(k, j) = h.a[active[j]][k];
    std::vector<double> lambda = solve_least_squares(A, u);
    std::size_t worst = active.size();
    double wv = -1e-10;
    for (std::size_t j = 0; j < lambda.size(); ++j)
      if (lambda[j] < wv) {
        wv = lambda[j];
        worst = j;
      }
    if (worst == active.size()) return x;
    active.erase(active.begin() + static_cast<long>(worst));
  }
  return x;
}

}  // namespace

std::vector<Coords> relevant_vectors(const Order& L) {
  const double R = 2 * covering_bound(L);
  std::map<Coords, std::vector<std::pair<double, Coords>>> cosets;
  std::vector<double> zero(L.dim(), 0.0);
  for_each_point_within(L, zero, R, [&](const Coords& c, double dsq) {
    if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; })) return;
    Coords key(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) key[i] = ((c[i] % 2) + 2) % 2;
    cosets[key].emplace_back(dsq, c);
  });
  std::vector<Coords> out;
  for (auto& [key, members] : cosets) {
    double m = INFINITY;
    for (const auto& e : members) m = std::min(m, e.first);
    std::vector<Coords> minimal;
    for (const auto& e : members)
      if (e.first <= m + 1e-9 * (1 + m)) minimal.push_back(e.second);
    if (L.is_rational() && minimal.size() > 2) {
      // Confirm ties exactly.
      Rational best = norm_sq(L.exact_point(minimal[0]));
      for (const auto& c : minimal) best = std::min(best, Rational(norm_sq(L.exact_point(c))));
      std::vector<Coords> exact_min;
      for (const auto& c : minimal)
        if (norm_sq(L.exact_point(c)) == best) exact_min.push_back(c);
      minimal = std::move(exact_min);
    }
    if (minimal.size() == 2)
      for (auto& c : minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FloatElement> voronoi_vertices(const Order& L) {
  if (L.rank() > 4) throw InvalidConfiguration("vertex enumeration is limited to rank <= 4");
  const auto q = span_frame(L);
  const Halfspaces h = voronoi_halfspaces(L, q);
  const std::size_t r = L.rank();
  std::vector<std::vector<double>> verts;
  std::vector<std::size_t> idx(r);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == r) {
      auto x = solve_rows(h, idx);
      if (!x || !feasible(h, *x, 1e-9)) return;
      for (const auto& v : verts) {
        double dd = 0;
        for (std::size_t k = 0; k < r; ++k) dd += (v[k] - (*x)[k]) * (v[k] - (*x)[k]);
        if (dd < 1e-16) return;
      }
      verts.push_back(*x);
      return;
    }
    for (std::size_t i = start; i < h.a.size(); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  std::vector<FloatElement> out;
  for (const auto& v : verts) out.emplace_back(L.algebra(), from_frame(q, v));
  std::sort(out.begin(), out.end(), [](const FloatElement& a, const FloatElement& b) { return a.coeffs() < b.coeffs(); });
  return out;
}

DirichletRadius dirichlet_radius(const Order& L, unsigned long seed) {
  DirichletRadius out;
  if (L.rank() <= 4) {
    auto verts = voronoi_vertices(L);
    double best = 0;
    for (const auto& v : verts) best = std::max(best, norm_sq(v));
    for (const auto& v : verts)
      if (norm_sq(v) >= best - 1e-9) out.farthest.push_back(v);
    out.value = std::sqrt(best);
    out.certified = true;
    out.method = "vertex enumeration over Voronoi-relevant vectors";
    return out;
  }
  const auto q = span_frame(L);
  const Halfspaces h = voronoi_halfspaces(L, q);
  const std::size_t r = L.rank();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 0;
  std::vector<double> best_x;
  for (int restart = 0; restart < 64; ++restart) {
    std::vector<double> u(r);
    for (auto& t : u) t = gauss(rng);
    std::vector<std::size_t> active;
    std::vector<double> x = lp_walk(h, u, std::vector<double>(r, 0.0), active);
    // Ascend: maximise <x, .> from the current vertex until |x| stops growing.
    for (int step = 0; step < 100; ++step) {
      std::vector<double> y = lp_walk(h, x, x, active);
      if (norm_sq(y) <= norm_sq(x) + 1e-13) break;
      x = y;
    }
    if (norm_sq(x) > best) {
      best = norm_sq(x);
      best_x = x;
    }
  }
  // The maximiser must be a point of the Voronoi cell: no lattice point is
  // closer than the origin.
  FloatElement xe(L.algebra(), from_frame(q, best_x));
  LatticePoint<double> np = nearest(L, xe);
  double dn = norm_sq(xe - np.value);
  out.value = std::sqrt(std::min(best, dn));
  out.certified = false;
  out.method = "active-set ascent over Voronoi-relevant facets (estimate)";
  out.farthest.push_back(xe);
  return out;
}

Order right_multiple(const Order& L, const SurdElement& m, std::string name) {
  std::vector<SurdElement> gens;
  for (const auto& g : L.generators()) gens.push_back(mul(g, m));
  return Order(std::move(name), L.algebra(), std::move(gens));
}

namespace {

SurdElement surd_element(Algebra a, const std::vector<std::string>& coeffs) {
  std::vector<Surd> c;
  for (const auto& s : coeffs) c.push_back(parse_surd(s));
  return SurdElement(a, std::move(c));
}

SurdElement basis_unit(Algebra a, std::size_t i) { return SurdElement::basis(a, i); }

std::vector<SurdElement> units(Algebra a, std::initializer_list<std::size_t> idx) {
  std::vector<SurdElement> v;
  for (auto i : idx) v.push_back(basis_unit(a, i));
  return v;
}

}  // namespace

std::vector<std::string> builtin_order_names() {
  return {"Z",        "Zi",         "Zi_times_1pi",     "Hurwitz", "Gausenstein",       "ThirdQuaternionic",
          "Lipschitz", "Hurwitz_times_1pi", "Cayley", "Cayley_times_1pe1", "Z1",          "Z2",
          "Z3",       "ImagLipschitz", "ImagGauss"};
}

Order builtin_order(const std::string& name) {
  using A = Algebra;
  if (name == "Z" || name == "Z1") return Order(name, A::R, units(A::R, {0}));
  if (name == "Zi" || name == "Z2") return Order(name, A::C, units(A::C, {0, 1}));
  if (name == "Zi_times_1pi") return right_multiple(builtin_order("Zi"), surd_element(A::C, {"1", "1"}), name);
  if (name == "Z3") return Order(name, A::H, units(A::H, {0, 1, 2}));
  if (name == "Lipschitz") return Order(name, A::H, units(A::H, {0, 1, 2, 3}));
  if (name == "ImagLipschitz") return Order(name, A::H, units(A::H, {1, 2, 3}));
  if (name == "ImagGauss") return Order(name, A::C, units(A::C, {1}));
  if (name == "Hurwitz") {
    auto g = units(A::H, {0, 1, 2});
    g.push_back(surd_element(A::H, {"1/2", "1/2", "1/2", "1/2"}));
    return Order(name, A::H, std::move(g));
  }
  if (name == "Hurwitz_times_1pi")
    return right_multiple(builtin_order("Hurwitz"), surd_element(A::H, {"1", "1", "0", "0"}), name);
  if (name == "Gausenstein") {
    auto g = units(A::H, {0, 1});
    g.push_back(surd_element(A::H, {"1/2", "0", "1/2*sqrt3", "0"}));
    g.push_back(surd_element(A::H, {"0", "1/2", "0", "1/2*sqrt3"}));
    return Order(name, A::H, std::move(g));
  }
  if (name == "ThirdQuaternionic") {
    std::vector<SurdElement> g = units(A::H, {0});
    g.push_back(surd_element(A::H, {"1/2", "1/4*sqrt2", "0", "-1/4*sqrt10"}));
    g.push_back(surd_element(A::H, {"1/2", "3/4*sqrt2", "0", "1/4*sqrt10"}));
    g.push_back(surd_element(A::H, {"1/2", "1/2*sqrt2", "1/2*sqrt5", "0"}));
    return Order(name, A::H, std::move(g));
  }
  if (name == "Cayley") {
    SurdElement h = surd_element(A::O, {"0", "1/2", "1/2", "1/2", "-1/2", "0", "0", "0"});
    std::vector<SurdElement> g = units(A::O, {0, 1, 2, 3});
    g.push_back(h);
    for (std::size_t i = 1; i <= 3; ++i) g.push_back(mul(basis_unit(A::O, i), h));
    return Order(name, A::O, std::move(g));
  }
  if (name == "Cayley_times_1pe1")
    return right_multiple(builtin_order("Cayley"), surd_element(A::O, {"1", "1", "0", "0", "0", "0", "0", "0"}),
                          name);
  throw UnknownName("unknown order '" + name + "'");
}

}  // namespace cfrac
