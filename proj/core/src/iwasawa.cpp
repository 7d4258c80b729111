#include "cfrac/iwasawa.hpp"

#include <cmath>
#include <sstream>

#include "cfrac/errors.hpp"
#include "cfrac/serialize.hpp"

namespace cfrac {

IwasawaSpace IwasawaSpace::make(Algebra k, std::size_t n, const Rational& scale_sq) {
  if (!is_associative(k))
    throw InvalidConfiguration("Iwasawa inversion spaces are built over an associative division algebra; O is not");
  if (n == 0) throw InvalidConfiguration("Iwasawa space needs n >= 1");
  if (scale_sq <= 0) throw InvalidConfiguration("Iwasawa scale must be positive");
  return {k, n, scale_sq};
}

std::string IwasawaSpace::describe() const {
  std::string s = "X^" + std::to_string(n) + "_" + algebra_name(k);
  if (scale_sq != 1) s += " (s^2 = " + to_string(scale_sq) + ")";
  return s;
}

template <class T>
bool IwasawaPoint<T>::is_identity() const {
  if (!v.is_zero()) return false;
  for (const auto& x : u)
    if (!x.is_zero()) return false;
  return true;
}

template <>
Rational scalar_of<Rational>(const Rational& q) {
  return q;
}
template <>
double scalar_of<double>(const Rational& q) {
  return q.get_d();
}

namespace {

double as_double(const Rational& q) { return q.get_d(); }
double as_double(double x) { return x; }

template <class T>
void require_shape(const IwasawaSpace& X, const IwasawaPoint<T>& p) {
  if (p.u.size() != X.n) throw DimensionMismatch("point has the wrong horizontal dimension for " + X.describe());
  if (p.v.algebra() != X.k) throw AlgebraMismatch("point is not over " + std::string(algebra_name(X.k)));
  for (const auto& x : p.u)
    if (x.algebra() != X.k) throw AlgebraMismatch("point is not over " + std::string(algebra_name(X.k)));
}

template <class T>
T norm_sq_vec(const std::vector<Element<T>>& u) {
  T s = ScalarTraits<T>::zero();
  for (const auto& x : u) s += norm_sq(x);
  return s;
}

template <class T>
bool close_elements(const Element<T>& a, const Element<T>& b, double tol, double* rel) {
  if constexpr (std::is_same_v<T, Rational>) {
    (void)tol;
    *rel = a == b ? 0.0 : 1.0;
    return a == b;
  } else {
    double d = norm(a - b), s = std::max(norm(a), norm(b));
    *rel = d == 0 ? 0.0 : d / std::max(s, 1e-300);
    return d <= tol * std::max(1.0, s);
  }
}

template <class T>
bool close_triples(const NullTriple<T>& a, const NullTriple<T>& b, double tol, double* rel) {
  double r = 0;
  bool ok = close_elements(a.Q, b.Q, tol, &r) && close_elements(a.P, b.P, tol, &r);
  *rel = r;
  for (std::size_t i = 0; ok && i < a.R.size(); ++i) {
    ok = close_elements(a.R[i], b.R[i], tol, &r);
    *rel = std::max(*rel, r);
  }
  return ok;
}

template <class T>
std::string pretty_point(const IwasawaPoint<T>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.u.size(); ++i) s += (i ? ", " : "") + pretty(p.u[i]);
  return s + "; " + pretty(p.v) + ")";
}

}  // namespace

template <class T>
IwasawaPoint<T> make_point(const IwasawaSpace& X, std::vector<Element<T>> u, const Element<T>& im_v) {
  IwasawaPoint<T> p{std::move(u), im(im_v)};
  require_shape(X, p);
  p.v[0] = scalar_of<T>(X.scale_sq) * norm_sq_vec(p.u) / T(2);
  return p;
}

template <class T>
IwasawaPoint<T> identity_point(const IwasawaSpace& X) {
  return {std::vector<Element<T>>(X.n, Element<T>(X.k)), Element<T>(X.k)};
}

template <class T>
T paraboloid_defect(const IwasawaSpace& X, const IwasawaPoint<T>& p) {
  return scalar_of<T>(X.scale_sq) * norm_sq_vec(p.u) - T(2) * re(p.v);
}

template <class T>
void check_point(const IwasawaSpace& X, const IwasawaPoint<T>& p, double tol) {
  require_shape(X, p);
  T d = paraboloid_defect(X, p);
  if constexpr (std::is_same_v<T, Rational>) {
    (void)tol;
    if (d != 0) throw InvalidConfiguration("point is off the paraboloid of " + X.describe() + ": defect " + to_string(d));
  } else {
    double scale = std::max(1.0, std::fabs(p.v[0]));
    if (!(std::fabs(d) <= tol * scale))
      throw InvalidConfiguration("point is off the paraboloid of " + X.describe() + ": defect " +
                                 float_to_string(d));
  }
}

template <class T>
Element<T> hermitian(const std::vector<Element<T>>& a, const std::vector<Element<T>>& b, Algebra k) {
  Element<T> s(k);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + mul(conj(a[i]), b[i]);
  return s;
}

template <class T>
IwasawaPoint<T> group_mul(const IwasawaSpace& X, const IwasawaPoint<T>& p, const IwasawaPoint<T>& q) {
  require_shape(X, p);
  require_shape(X, q);
  IwasawaPoint<T> r;
  r.u.reserve(X.n);
  for (std::size_t i = 0; i < X.n; ++i) r.u.push_back(p.u[i] + q.u[i]);
  r.v = p.v + scale(hermitian(p.u, q.u, X.k), scalar_of<T>(X.scale_sq)) + q.v;
  return r;
}

template <class T>
IwasawaPoint<T> group_inverse(const IwasawaSpace& X, const IwasawaPoint<T>& p) {
  require_shape(X, p);
  IwasawaPoint<T> r;
  for (const auto& x : p.u) r.u.push_back(-x);
  r.v = conj(p.v);
  return r;
}

template <class T>
T gauge4(const IwasawaPoint<T>& p) {
  return norm_sq(p.v);
}

template <class T>
double gauge(const IwasawaPoint<T>& p) {
  return std::sqrt(std::sqrt(as_double(gauge4(p))));
}

// Vertical part of p^{-1} * q written as s^2/2 |du|^2 + Im(v_q - v_p) - s^2 Im<u_p, du>,
// equal to conj(v_p) + v_q - s^2 <u_p, u_q> on the paraboloid without the cancellation.
template <class T>
T distance4(const IwasawaSpace& X, const IwasawaPoint<T>& p, const IwasawaPoint<T>& q) {
  require_shape(X, p);
  require_shape(X, q);
  const T s2 = scalar_of<T>(X.scale_sq);
  std::vector<Element<T>> du;
  for (std::size_t i = 0; i < X.n; ++i) du.push_back(q.u[i] - p.u[i]);
  Element<T> w = im(q.v) - im(p.v) - im(scale(hermitian(p.u, du, X.k), s2));
  w[0] = s2 * norm_sq_vec(du) / T(2);
  return norm_sq(w);
}

template <class T>
double distance(const IwasawaSpace& X, const IwasawaPoint<T>& p, const IwasawaPoint<T>& q) {
  return std::sqrt(std::sqrt(as_double(distance4(X, p, q))));
}

template <class T>
IwasawaPoint<T> koranyi_inversion(const IwasawaSpace& X, const IwasawaPoint<T>& p) {
  require_shape(X, p);
  if (p.v.is_zero()) throw PointAtInfinity("Koranyi inversion of a point with v = 0");
  Element<T> vi = inv(p.v);
  IwasawaPoint<T> r;
  for (const auto& x : p.u) r.u.push_back(-mul(x, vi));
  r.v = vi;
  return r;
}

template <class T>
ExtendedPoint<T> koranyi_inversion(const IwasawaSpace& X, const ExtendedPoint<T>& p) {
  if (std::holds_alternative<Infinity>(p)) return identity_point<T>(X);
  const auto& q = std::get<IwasawaPoint<T>>(p);
  if (q.v.is_zero()) return Infinity{};
  return koranyi_inversion(X, q);
}

template <class T>
InversionIdentityReport verify_inversion_identity(const IwasawaSpace& X, const IwasawaPoint<T>& p,
                                                  const IwasawaPoint<T>& q, double tol) {
  InversionIdentityReport r;
  T lhs4 = distance4(X, p, q);
  T rhs4 = distance4(X, koranyi_inversion(X, p), koranyi_inversion(X, q)) * gauge4(p) * gauge4(q);
  r.lhs = std::sqrt(std::sqrt(as_double(lhs4)));
  r.rhs = std::sqrt(std::sqrt(as_double(rhs4)));
  if constexpr (std::is_same_v<T, Rational>) {
    (void)tol;
    r.ok = lhs4 == rhs4;
    r.relative = r.ok ? 0.0 : 1.0;
  } else {
    r.relative = r.lhs == r.rhs ? 0.0 : std::fabs(r.lhs - r.rhs) / std::max(r.lhs, r.rhs);
    r.ok = r.relative <= tol;
  }
  return r;
}

template <class T>
T null_defect(const IwasawaSpace& X, const NullTriple<T>& t) {
  return scalar_of<T>(X.scale_sq) * norm_sq_vec(t.R) - T(2) * re(mul(conj(t.Q), t.P));
}

bool IwasawaAlgorithm::exact_capable() const {
  return horizontal->is_rational() && (!vertical || vertical->is_rational());
}

double IwasawaAlgorithm::gauge_radius() const {
  double r1 = horizontal_domain.sup_norm();
  double re_v = as_double(space.scale_sq) * static_cast<double>(space.n) * r1 * r1 / 2;
  double r2 = vertical_domain ? vertical_domain->sup_norm() : 0.0;
  return std::sqrt(std::sqrt(re_v * re_v + r2 * r2));
}

std::vector<std::string> iwasawa_algorithm_names() { return {"x1h", "x1c-heisenberg", "x3r"}; }

namespace {

Domain imaginary_box(Algebra k) {
  std::vector<ExactElement> frame;
  std::vector<Interval> bounds;
  for (std::size_t j = 1; j < dimension(k); ++j) {
    frame.push_back(ExactElement::basis(k, j));
    bounds.push_back({Surd(make_rational(-1, 2)), Surd(make_rational(1, 2))});
  }
  return Domain::box(k, std::move(frame), std::move(bounds));
}

}  // namespace

IwasawaAlgorithm iwasawa_algorithm(const std::string& name) {
  auto order = [](const char* n) { return std::make_shared<const Order>(builtin_order(n)); };
  const Rational half = make_rational(1, 2);
  if (name == "x1h") {
    auto H = order("Hurwitz");
    return {name, IwasawaSpace::make(Algebra::H, 1, 2), H, Domain::dirichlet(H), order("ImagLipschitz"),
            imaginary_box(Algebra::H), H,
            "X^1_H, horizontal Hurwitz integers with their Dirichlet domain, vertical Zi+Zj+Zk with [-1/2,1/2)^3"};
  }
  if (name == "x1c-heisenberg") {
    auto G = order("Zi");
    return {name, IwasawaSpace::make(Algebra::C, 1, 2), G, Domain::unit_box(Algebra::C, 2, Surd(-half), Surd(half)),
            order("ImagGauss"), imaginary_box(Algebra::C), G,
            "Heisenberg group X^1_C, horizontal Z[i] with [-1/2,1/2)^2, vertical Zi with [-1/2,1/2)"};
  }
  if (name == "x3r") {
    auto Z = order("Z");
    return {name, IwasawaSpace::make(Algebra::R, 3, 2), Z, Domain::unit_box(Algebra::R, 1, Surd(-half), Surd(half)), nullptr,
            std::nullopt, Z, "X^3_R = R^3 with Z^3 digits and K = [-1/2,1/2)^3"};
  }
  throw UnknownName("unknown Iwasawa algorithm '" + name + "'");
}

template <class T>
bool in_domain(const IwasawaAlgorithm& algo, const IwasawaPoint<T>& p) {
  require_shape(algo.space, p);
  for (const auto& x : p.u)
    if (!algo.horizontal_domain.contains(x)) return false;
  Element<T> w = im(p.v);
  if (!algo.vertical_domain) return w.is_zero();
  return algo.vertical_domain->contains(w);
}

FloatIwasawaPoint sample_point(const IwasawaAlgorithm& algo, std::mt19937_64& rng) {
  std::vector<FloatElement> u;
  for (std::size_t i = 0; i < algo.space.n; ++i) u.push_back(algo.horizontal_domain.sample(rng));
  FloatElement w = algo.vertical_domain ? algo.vertical_domain->sample(rng) : FloatElement(algo.space.k);
  return make_point(algo.space, std::move(u), w);
}

ExactIwasawaPoint sample_point_exact(const IwasawaAlgorithm& algo, std::mt19937_64& rng, long denominator) {
  std::vector<ExactElement> u;
  for (std::size_t i = 0; i < algo.space.n; ++i) u.push_back(algo.horizontal_domain.sample_exact(rng, denominator));
  ExactElement w =
      algo.vertical_domain ? algo.vertical_domain->sample_exact(rng, denominator) : ExactElement(algo.space.k);
  return make_point(algo.space, std::move(u), w);
}

ExactIwasawaPoint random_point_exact(const IwasawaSpace& X, std::mt19937_64& rng, long range, long denominator) {
  std::uniform_int_distribution<long> d(-range * denominator, range * denominator);
  auto elem = [&](bool imag) {
    ExactElement e(X.k);
    for (std::size_t i = imag ? 1 : 0; i < e.dim(); ++i) e[i] = make_rational(d(rng), denominator);
    return e;
  };
  std::vector<ExactElement> u;
  for (std::size_t i = 0; i < X.n; ++i) u.push_back(elem(false));
  return make_point(X, std::move(u), elem(true));
}

FloatIwasawaPoint random_point(const IwasawaSpace& X, std::mt19937_64& rng, double range) {
  std::uniform_real_distribution<double> d(-range, range);
  auto elem = [&](bool imag) {
    FloatElement e(X.k);
    for (std::size_t i = imag ? 1 : 0; i < e.dim(); ++i) e[i] = d(rng);
    return e;
  };
  std::vector<FloatElement> u;
  for (std::size_t i = 0; i < X.n; ++i) u.push_back(elem(false));
  return make_point(X, std::move(u), elem(true));
}

template <class T>
IwasawaStep<T> iwasawa_step(const IwasawaPoint<T>& x, const IwasawaAlgorithm& algo, std::size_t step) {
  const IwasawaSpace& X = algo.space;
  if (x.is_identity()) throw Terminated("Iwasawa expansion terminated at the identity");
  IwasawaPoint<T> y = koranyi_inversion(X, x);
  IwasawaDigit<T> a;
  for (std::size_t i = 0; i < X.n; ++i) {
    LatticePoint<T> lp = reduce_into(*algo.horizontal, algo.horizontal_domain, y.u[i], step);
    a.alpha.push_back(lp.value);
    a.alpha_coords.push_back(lp.coords);
  }
  const T s2 = scalar_of<T>(X.scale_sq);
  Element<T> b(X.k);
  if (algo.vertical) {
    Element<T> defect = im(y.v) - im(scale(hermitian(a.alpha, y.u, X.k), s2));
    LatticePoint<T> lp = reduce_into(*algo.vertical, *algo.vertical_domain, defect, step);
    b = lp.value;
    a.vertical_coords = lp.coords;
  }
  a.beta = b;
  a.beta[0] = s2 * norm_sq_vec(a.alpha) / T(2);
  IwasawaPoint<T> next = group_mul(X, group_inverse(X, a.as_point()), y);
  return {std::move(a), std::move(next)};
}

template <class T>
IwasawaExpansion<T> iwasawa_expand(const IwasawaPoint<T>& x0, const IwasawaAlgorithm& algo, std::size_t n_max) {
  check_point(algo.space, x0);
  if (!in_domain(algo, x0)) throw DomainError("x0 = " + pretty_point(x0) + " is not in K", 0);
  IwasawaExpansion<T> e;
  e.x0 = x0;
  IwasawaPoint<T> x = x0;
  auto record = [&](const IwasawaPoint<T>& p) {
    e.iterates.push_back(p);
    double g = gauge(p);
    e.gauges.push_back(g);
    e.dani.push_back(gauge4(p) < ScalarTraits<T>::one());
  };
  record(x);
  for (std::size_t n = 1;; ++n) {
    if (x.is_identity()) {
      e.termination = Termination::ExactZero;
      break;
    }
    if constexpr (std::is_same_v<T, double>) {
      if (gauge(x) < kProbableRationalThreshold) {
        e.termination = Termination::ProbableRational;
        break;
      }
    }
    if (n > n_max) {
      e.termination = Termination::DepthCap;
      break;
    }
    IwasawaStep<T> s = iwasawa_step(x, algo, n);
    e.digits.push_back(std::move(s.digit));
    x = std::move(s.next);
    record(x);
  }
  return e;
}

template <class T>
NullTriple<T> qrp_suffix(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits, std::size_t begin,
                         std::size_t end) {
  const T s2 = scalar_of<T>(X.scale_sq);
  NullTriple<T> t{Element<T>::one(X.k), std::vector<Element<T>>(X.n, Element<T>(X.k)), Element<T>(X.k)};
  for (std::size_t i = end; i-- > begin;) {
    const auto& a = digits[i];
    NullTriple<T> r;
    r.Q = -mul(a.beta, t.Q) - scale(hermitian(a.alpha, t.R, X.k), s2) - t.P;
    for (std::size_t j = 0; j < X.n; ++j) r.R.push_back(mul(a.alpha[j], t.Q) + t.R[j]);
    r.P = -t.Q;
    t = std::move(r);
  }
  return t;
}

template <class T>
std::vector<NullTriple<T>> qrp_convergents(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits) {
  std::vector<NullTriple<T>> out;
  for (std::size_t n = 0; n <= digits.size(); ++n) out.push_back(qrp_suffix(X, digits, 0, n));
  return out;
}

template <class T>
std::vector<NullTriple<T>> qrp_matrix(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits) {
  const std::size_t m = X.n + 2;
  using E = Element<T>;
  const T s2 = scalar_of<T>(X.scale_sq);
  std::vector<std::vector<E>> M(m, std::vector<E>(m, E(X.k)));
  for (std::size_t i = 0; i < m; ++i) M[i][i] = E::one(X.k);
  auto column = [&]() {
    NullTriple<T> t{M[0][0], {}, M[m - 1][0]};
    for (std::size_t j = 0; j < X.n; ++j) t.R.push_back(M[1 + j][0]);
    return t;
  };
  std::vector<NullTriple<T>> out{column()};
  for (const auto& a : digits) {
    // B = [[-beta, -s^2 conj(alpha)^T, -1], [alpha, I, 0], [-1, 0, 0]]
    std::vector<std::vector<E>> B(m, std::vector<E>(m, E(X.k)));
    B[0][0] = -a.beta;
    for (std::size_t j = 0; j < X.n; ++j) {
      B[0][1 + j] = -scale(conj(a.alpha[j]), s2);
      B[1 + j][0] = a.alpha[j];
      B[1 + j][1 + j] = E::one(X.k);
    }
    B[0][m - 1] = -E::one(X.k);
    B[m - 1][0] = -E::one(X.k);
    std::vector<std::vector<E>> N(m, std::vector<E>(m, E(X.k)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        if (M[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j)
          if (!B[k][j].is_zero()) N[i][j] = N[i][j] + mul(M[i][k], B[k][j]);
      }
    M = std::move(N);
    out.push_back(column());
  }
  return out;
}

template <class T>
IwasawaPoint<T> convergent_point(const IwasawaSpace& X, const NullTriple<T>& t) {
  if (t.Q.is_zero()) throw PointAtInfinity("convergent with Q = 0");
  Element<T> qi = inv(t.Q);
  IwasawaPoint<T> p;
  for (const auto& r : t.R) p.u.push_back(mul(r, qi));
  p.v = mul(t.P, qi);
  (void)X;
  return p;
}

template <class T>
IwasawaPoint<T> nested_point(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits, std::size_t begin,
                             std::size_t end) {
  IwasawaPoint<T> x = identity_point<T>(X);
  for (std::size_t i = end; i-- > begin;) x = koranyi_inversion(X, group_mul(X, digits[i].as_point(), x));
  return x;
}

template <class T>
CheckResult verify_qrp_routes(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits) {
  CheckResult r;
  auto back = qrp_convergents(X, digits);
  auto fwd = qrp_matrix(X, digits);
  for (std::size_t n = 0; n < back.size(); ++n) {
    double rel = 0;
    if (!close_triples(back[n], fwd[n], 1e-9, &rel)) {
      r.ok = false;
      r.failed_at = n;
      r.detail = "backward recursion and B-matrix product disagree";
      return r;
    }
    r.worst_relative = std::max(r.worst_relative, rel);
  }
  return r;
}

template <class T>
CheckResult verify_null_triples(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits) {
  CheckResult r;
  auto triples = qrp_convergents(X, digits);
  for (std::size_t n = 0; n < triples.size(); ++n) {
    T d = null_defect(X, triples[n]);
    bool ok;
    if constexpr (std::is_same_v<T, Rational>)
      ok = d == 0;
    else
      ok = std::fabs(d) <= 1e-9 * std::max(1.0, norm_sq(triples[n].Q) + norm_sq(triples[n].P));
    if (!ok) {
      r.ok = false;
      r.failed_at = n;
      r.detail = "null defect " + std::to_string(as_double(d));
      return r;
    }
  }
  return r;
}

template <class T>
CheckResult verify_convergent_points(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits) {
  CheckResult r;
  auto triples = qrp_convergents(X, digits);
  for (std::size_t n = 0; n < triples.size(); ++n) {
    IwasawaPoint<T> a = convergent_point(X, triples[n]);
    IwasawaPoint<T> b = nested_point(X, digits, 0, n);
    double rel = 0, worst = 0;
    bool ok = close_elements(a.v, b.v, 1e-9, &rel);
    worst = rel;
    for (std::size_t j = 0; ok && j < X.n; ++j) {
      ok = close_elements(a.u[j], b.u[j], 1e-9, &rel);
      worst = std::max(worst, rel);
    }
    if (!ok) {
      r.ok = false;
      r.failed_at = n;
      r.detail = "(R Q^-1, P Q^-1) = " + pretty_point(a) + " but nested inverse maps give " + pretty_point(b);
      return r;
    }
    r.worst_relative = std::max(r.worst_relative, worst);
  }
  return r;
}

template <class T>
CheckResult verify_iwasawa_suffix_denominators(const IwasawaSpace& X, const std::vector<IwasawaDigit<T>>& digits) {
  CheckResult r;
  for (std::size_t n = 1; n <= digits.size(); ++n)
    for (std::size_t i = 0; i < n; ++i) {
      T q = norm_sq(qrp_suffix(X, digits, i, n).Q);
      bool ok;
      if constexpr (std::is_same_v<T, Rational>)
        ok = q >= 1;
      else
        ok = q >= 1 - 1e-9;
      if (!ok) {
        r.ok = false;
        r.failed_at = n;
        r.detail = "|Q[a_" + std::to_string(i + 1) + "..a_" + std::to_string(n) + "]|^2 = " +
                   std::to_string(as_double(q));
        return r;
      }
    }
  return r;
}

template <class T>
IwasawaErrorReport verify_iwasawa_error(const IwasawaExpansion<T>& exp, std::size_t n, const IwasawaSpace& X,
                                        double tol) {
  if (n > exp.depth()) throw InvalidConfiguration("error formula depth exceeds the expansion");
  IwasawaErrorReport r;
  NullTriple<T> t = qrp_suffix(X, exp.digits, 0, n);
  T lhs4 = distance4(X, convergent_point(X, t), exp.x0);
  T num = ScalarTraits<T>::one();
  for (std::size_t i = 0; i <= n; ++i) num *= gauge4(exp.iterates[i]);
  T rhs4 = num / norm_sq(t.Q);
  r.lhs = std::sqrt(std::sqrt(as_double(lhs4)));
  r.rhs = std::sqrt(std::sqrt(as_double(rhs4)));
  if constexpr (std::is_same_v<T, Rational>) {
    (void)tol;
    r.exact_equal = lhs4 == rhs4;
    r.ok = r.exact_equal;
    r.relative = r.ok ? 0.0 : std::fabs(r.lhs - r.rhs) / std::max(r.rhs, 1e-300);
  } else {
    r.relative = r.lhs == r.rhs ? 0.0 : std::fabs(r.lhs - r.rhs) / std::max(r.rhs, 1e-300);
    r.ok = r.relative <= tol;
  }
  return r;
}

bool verify_integrality(const IwasawaAlgorithm& algo, const std::vector<NullTriple<Rational>>& triples) {
  for (const auto& t : triples)
    if (!contains(*algo.ring, t.Q) || !contains(*algo.ring, t.P)) return false;
  return true;
}

bool verify_integrality(const IwasawaAlgorithm& algo, const IwasawaExpansion<Rational>& exp) {
  return verify_integrality(algo, qrp_convergents(algo.space, exp.digits));
}

namespace {

template <class T>
std::string serialize_point(const IwasawaPoint<T>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.u.size(); ++i) s += (i ? ";" : "") + serialize(p.u[i]);
  return s + "|" + serialize(p.v);
}

template <class T>
const Element<T>& as_backend(const AlgebraElement& e);
template <>
const ExactElement& as_backend<Rational>(const AlgebraElement& e) {
  return e.exact();
}
template <>
const FloatElement& as_backend<double>(const AlgebraElement& e) {
  return e.as_float();
}

template <class T>
IwasawaPoint<T> parse_point_as(const std::vector<std::string>& us, const std::string& vs, const IwasawaSpace& X,
                               Backend b) {
  IwasawaPoint<T> p;
  for (const auto& s : us) p.u.push_back(as_backend<T>(parse_element(s, X.k, b).with_backend(b)));
  p.v = as_backend<T>(parse_element(vs, X.k, b).with_backend(b));
  check_point(X, p);
  return p;
}

}  // namespace

std::string serialize(const IwasawaSpace&, const ExactIwasawaPoint& p) { return serialize_point(p); }
std::string serialize(const IwasawaSpace&, const FloatIwasawaPoint& p) { return serialize_point(p); }

std::variant<ExactIwasawaPoint, FloatIwasawaPoint> parse_iwasawa_point(const std::string& text,
                                                                       const IwasawaSpace& X, Backend b) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw ParseError("Iwasawa point must look like 'u_1;...;u_n|v': " + text);
  std::vector<std::string> us;
  std::stringstream ss(text.substr(0, bar));
  for (std::string item; std::getline(ss, item, ';');) us.push_back(item);
  if (us.size() != X.n)
    throw ParseError("expected " + std::to_string(X.n) + " horizontal coordinates in '" + text + "'");
  std::string vs = text.substr(bar + 1);
  if (b == Backend::Exact) return parse_point_as<Rational>(us, vs, X, b);
  return parse_point_as<double>(us, vs, X, b);
}

#define CFRAC_INSTANTIATE(T)                                                                                    \
  template struct IwasawaPoint<T>;                                                                            \
  template IwasawaPoint<T> make_point<T>(const IwasawaSpace&, std::vector<Element<T>>, const Element<T>&);     \
  template IwasawaPoint<T> identity_point<T>(const IwasawaSpace&);                                            \
  template T paraboloid_defect<T>(const IwasawaSpace&, const IwasawaPoint<T>&);                               \
  template void check_point<T>(const IwasawaSpace&, const IwasawaPoint<T>&, double);                          \
  template Element<T> hermitian<T>(const std::vector<Element<T>>&, const std::vector<Element<T>>&, Algebra);   \
  template IwasawaPoint<T> group_mul<T>(const IwasawaSpace&, const IwasawaPoint<T>&, const IwasawaPoint<T>&);  \
  template IwasawaPoint<T> group_inverse<T>(const IwasawaSpace&, const IwasawaPoint<T>&);                     \
  template T gauge4<T>(const IwasawaPoint<T>&);                                                               \
  template double gauge<T>(const IwasawaPoint<T>&);                                                           \
  template T distance4<T>(const IwasawaSpace&, const IwasawaPoint<T>&, const IwasawaPoint<T>&);               \
  template double distance<T>(const IwasawaSpace&, const IwasawaPoint<T>&, const IwasawaPoint<T>&);           \
  template IwasawaPoint<T> koranyi_inversion<T>(const IwasawaSpace&, const IwasawaPoint<T>&);                 \
  template ExtendedPoint<T> koranyi_inversion<T>(const IwasawaSpace&, const ExtendedPoint<T>&);               \
  template InversionIdentityReport verify_inversion_identity<T>(const IwasawaSpace&, const IwasawaPoint<T>&,  \
                                                                const IwasawaPoint<T>&, double);              \
  template T null_defect<T>(const IwasawaSpace&, const NullTriple<T>&);                                       \
  template bool in_domain<T>(const IwasawaAlgorithm&, const IwasawaPoint<T>&);                                \
  template IwasawaStep<T> iwasawa_step<T>(const IwasawaPoint<T>&, const IwasawaAlgorithm&, std::size_t);      \
  template IwasawaExpansion<T> iwasawa_expand<T>(const IwasawaPoint<T>&, const IwasawaAlgorithm&, std::size_t); \
  template NullTriple<T> qrp_suffix<T>(const IwasawaSpace&, const std::vector<IwasawaDigit<T>>&, std::size_t,  \
                                       std::size_t);                                                          \
  template std::vector<NullTriple<T>> qrp_convergents<T>(const IwasawaSpace&,                                 \
                                                         const std::vector<IwasawaDigit<T>>&);                 \
  template std::vector<NullTriple<T>> qrp_matrix<T>(const IwasawaSpace&, const std::vector<IwasawaDigit<T>>&); \
  template IwasawaPoint<T> convergent_point<T>(const IwasawaSpace&, const NullTriple<T>&);                    \
  template IwasawaPoint<T> nested_point<T>(const IwasawaSpace&, const std::vector<IwasawaDigit<T>>&,          \
                                           std::size_t, std::size_t);                                         \
  template CheckResult verify_qrp_routes<T>(const IwasawaSpace&, const std::vector<IwasawaDigit<T>>&);         \
  template CheckResult verify_null_triples<T>(const IwasawaSpace&, const std::vector<IwasawaDigit<T>>&);       \
  template CheckResult verify_convergent_points<T>(const IwasawaSpace&, const std::vector<IwasawaDigit<T>>&);  \
  template CheckResult verify_iwasawa_suffix_denominators<T>(const IwasawaSpace&,                             \
                                                             const std::vector<IwasawaDigit<T>>&);             \
  template IwasawaErrorReport verify_iwasawa_error<T>(const IwasawaExpansion<T>&, std::size_t,                \
                                                      const IwasawaSpace&, double);

CFRAC_INSTANTIATE(Rational)
CFRAC_INSTANTIATE(double)

#undef CFRAC_INSTANTIATE

}  // namespace cfrac
