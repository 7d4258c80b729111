#include "cfrac/cf.hpp"

#include <cmath>
#include <set>

#include "cfrac/errors.hpp"
#include "cfrac/serialize.hpp"

namespace cfrac {

const char* inversion_kind_name(InversionKind k) {
  switch (k) {
    case InversionKind::Standard: return "standard";
    case InversionKind::Conjugate: return "conjugate";
    case InversionKind::Rotated: return "rotated";
  }
  return "?";
}

Inversion Inversion::standard(Algebra a) {
  Inversion i;
  i.kind_ = InversionKind::Standard;
  i.algebra_ = a;
  i.unit_ = FloatElement::one(a);
  i.exact_unit_ = ExactElement::one(a);
  return i;
}

Inversion Inversion::conjugate(Algebra a) {
  Inversion i = standard(a);
  i.kind_ = InversionKind::Conjugate;
  return i;
}

Inversion Inversion::rotated(const FloatElement& unit) {
  if (std::fabs(norm_sq(unit) - 1.0) > 1e-12) throw InvalidConfiguration("rotation factor is not a unit");
  Inversion i;
  i.kind_ = InversionKind::Rotated;
  i.algebra_ = unit.algebra();
  i.unit_ = unit;
  return i;
}

Inversion Inversion::rotated(const ExactElement& unit) {
  if (norm_sq(unit) != 1) throw InvalidConfiguration("rotation factor is not a unit");
  Inversion i;
  i.kind_ = InversionKind::Rotated;
  i.algebra_ = unit.algebra();
  i.unit_ = to_float(unit);
  i.exact_unit_ = unit;
  return i;
}

ExactElement Inversion::apply(const ExactElement& x) const {
  switch (kind_) {
    case InversionKind::Standard: return inv(x);
    case InversionKind::Conjugate: return inv(conj(x));
    case InversionKind::Rotated:
      if (!exact_unit_) throw UnsupportedBackend("rotated inversion with an irrational unit needs the float backend");
      return mul(*exact_unit_, inv(conj(x)));
  }
  return x;
}

FloatElement Inversion::apply(const FloatElement& x) const {
  switch (kind_) {
    case InversionKind::Standard: return inv(x);
    case InversionKind::Conjugate: return inv(conj(x));
    case InversionKind::Rotated: return mul(unit_, inv(conj(x)));
  }
  return x;
}

ExactElement Inversion::apply_inverse(const ExactElement& y) const {
  switch (kind_) {
    case InversionKind::Standard: return inv(y);
    case InversionKind::Conjugate: return inv(conj(y));
    case InversionKind::Rotated:
      if (!exact_unit_) throw UnsupportedBackend("rotated inversion with an irrational unit needs the float backend");
      return conj(inv(mul(conj(*exact_unit_), y)));
  }
  return y;
}

FloatElement Inversion::apply_inverse(const FloatElement& y) const {
  switch (kind_) {
    case InversionKind::Standard: return inv(y);
    case InversionKind::Conjugate: return inv(conj(y));
    case InversionKind::Rotated: return conj(inv(mul(conj(unit_), y)));
  }
  return y;
}

std::string Inversion::describe() const {
  switch (kind_) {
    case InversionKind::Standard: return "1/x";
    case InversionKind::Conjugate: return "1/conj(x)";
    case InversionKind::Rotated: return "(" + pretty(unit_) + ")/conj(x)";
  }
  return "?";
}

bool CFAlgorithm::exact_capable() const {
  if (!order->is_rational()) return false;
  if (inversion.kind() == InversionKind::Rotated && !inversion.exact_unit()) return false;
  return true;
}

void validate(const CFAlgorithm& algo, unsigned long seed) {
  if (algo.order->algebra() != algo.algebra || algo.domain.algebra() != algo.algebra ||
      algo.inversion.algebra() != algo.algebra)
    throw InvalidConfiguration("algorithm '" + algo.name + "' mixes algebras");
  if (algo.inversion.kind() == InversionKind::Rotated && std::fabs(norm_sq(algo.inversion.unit()) - 1) > 1e-12)
    throw InvalidConfiguration("algorithm '" + algo.name + "': rotation factor is not a unit");
  if (algo.domain.sup_norm() > 1 + 1e-9)
    throw InvalidConfiguration("algorithm '" + algo.name + "': K is not inside the closed unit ball");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 256; ++i)
    if (norm(algo.domain.sample(rng)) > 1 + 1e-9)
      throw InvalidConfiguration("algorithm '" + algo.name + "': sampled point of K outside the unit ball");
}

namespace {

template <class T> Element<T> lattice_value(const Order& L, const Coords& c);
template <> ExactElement lattice_value<Rational>(const Order& L, const Coords& c) { return L.exact_point(c); }
template <> FloatElement lattice_value<double>(const Order& L, const Coords& c) { return L.point(c); }

bool same_order(const Order& a, const Order& b) { return &a == &b || a.name() == b.name(); }

template <class T>
bool below_one(const Element<T>& x) {
  return norm_sq(x) < ScalarTraits<T>::one();
}

template <class T>
bool is_close(const Element<T>& a, const Element<T>& b, double tol, double* rel) {
  if constexpr (std::is_same_v<T, Rational>) {
    (void)tol;
    if (rel) *rel = a == b ? 0.0 : 1.0;
    return a == b;
  } else {
    double d = norm(a - b), s = std::max(norm(a), norm(b));
    double r = d / std::max(s, 1e-300);
    if (rel) *rel = d == 0 ? 0.0 : r;
    return d <= tol * std::max(1.0, s);
  }
}

double as_double(const Rational& q) { return q.get_d(); }
double as_double(double x) { return x; }

}  // namespace

template <class T>
LatticePoint<T> reduce_into(const Order& L, const Domain& K, const Element<T>& y, std::size_t step) {
  if (K.kind() == DomainKind::Dirichlet && same_order(*K.order(), L)) return nearest(L, y);
  const double R = K.sup_norm() + 1e-7;
  std::vector<Coords> found;
  for (const auto& c : points_within(L, to_float(y), R)) {
    Element<T> p = lattice_value<T>(L, c);
    if (K.contains(Element<T>(y - p))) found.push_back(c);
  }
  if (found.size() != 1)
    throw DomainError(std::string(found.empty() ? "no digit" : "several digits") + " for " + pretty(y) +
                          " in lattice " + L.name(),
                      step);
  return {found[0], lattice_value<T>(L, found[0])};
}

template <class T>
GaussStep<T> gauss_step(const Element<T>& x, const CFAlgorithm& algo, std::size_t step) {
  if (x.is_zero()) throw Terminated("expansion terminated at x = 0");
  Element<T> y = algo.inversion.apply(x);
  LatticePoint<T> p = reduce_into(*algo.order, algo.domain, y, step);
  return {p.coords, p.value, y - p.value};
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::ExactZero: return "exact_zero";
    case Termination::ProbableRational: return "probable_rational";
    case Termination::DepthCap: return "depth_cap";
    case Termination::NoDigit: return "no_digit";
  }
  return "?";
}

template <class T>
Expansion<T> expand(const Element<T>& x0, std::size_t n_max, const CFAlgorithm& algo) {
  if (x0.algebra() != algo.algebra) throw AlgebraMismatch("x0 is not in the algorithm's algebra");
  if (!algo.domain.contains(x0)) throw DomainError("x0 = " + pretty(x0) + " is not in K", 0);
  Expansion<T> e;
  e.x0 = x0;
  Element<T> x = x0;
  auto record = [&](const Element<T>& v) {
    e.iterates.push_back(v);
    e.norms.push_back(norm(v));
    e.dani.push_back(below_one(v));
  };
  record(x);
  e.termination = Termination::DepthCap;
  for (std::size_t n = 1;; ++n) {
    if (x.is_zero()) {
      e.termination = Termination::ExactZero;
      break;
    }
    if constexpr (std::is_same_v<T, double>) {
      if (norm(x) < kProbableRationalThreshold) {
        e.termination = Termination::ProbableRational;
        break;
      }
    }
    if (n > n_max) break;
    GaussStep<T> s = gauss_step(x, algo, n);
    e.digits.push_back(s.digit);
    e.digit_coords.push_back(s.coords);
    x = s.next;
    record(x);
  }
  return e;
}

template <class T>
Convergent<T> suffix_convergent(const std::vector<Element<T>>& digits, std::size_t begin, std::size_t end,
                                Algebra a) {
  Convergent<T> c{Element<T>(a), Element<T>::one(a), end - begin};
  for (std::size_t i = end; i-- > begin;) {
    Element<T> q = mul(digits[i], c.Q) + c.P;
    c.P = c.Q;
    c.Q = q;
  }
  return c;
}

template <class T>
std::vector<Element<T>> suffix_denominators(const std::vector<Element<T>>& digits, Algebra a) {
  std::vector<Element<T>> qs(digits.size(), Element<T>(a));
  Element<T> P(a), Q = Element<T>::one(a);
  for (std::size_t i = digits.size(); i-- > 0;) {
    Element<T> q = mul(digits[i], Q) + P;
    P = Q;
    Q = q;
    qs[i] = Q;
  }
  return qs;
}

template <class T>
std::vector<Convergent<T>> convergents_backward(const std::vector<Element<T>>& digits, Algebra a) {
  std::vector<Convergent<T>> out;
  for (std::size_t n = 0; n <= digits.size(); ++n) out.push_back(suffix_convergent(digits, 0, n, a));
  return out;
}

template <class T>
std::vector<Convergent<T>> convergents_forward(const std::vector<Element<T>>& digits, Algebra a) {
  if (!is_associative(a)) throw InvalidConfiguration("forward convergent recursion needs an associative algebra");
  std::vector<Convergent<T>> out;
  Element<T> p2 = Element<T>::one(a), q2(a);     // p_{n-2}, q_{n-2}
  Element<T> p1(a), q1 = Element<T>::one(a);     // p_{n-1}, q_{n-1}
  out.push_back({p1, q1, 0});
  for (std::size_t n = 0; n < digits.size(); ++n) {
    Element<T> p = p2 + mul(p1, digits[n]);
    Element<T> q = q2 + mul(q1, digits[n]);
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
    out.push_back({p1, q1, n + 1});
  }
  return out;
}

template <class T>
std::vector<Convergent<T>> convergents(const std::vector<Element<T>>& digits, Algebra a) {
  if (is_associative(a)) return convergents_forward(digits, a);
  return convergents_backward(digits, a);
}

template <class T>
Element<T> nested_value(const std::vector<Element<T>>& digits, Algebra a, std::size_t begin, std::size_t end) {
  end = std::min(end, digits.size());
  Element<T> x(a);
  for (std::size_t i = end; i-- > begin;) {
    Element<T> s = x + digits[i];
    if (s.is_zero()) throw ZeroDenominator("zero denominator in suffix " + std::to_string(i + 1), i + 1);
    x = inv(s);
  }
  return x;
}

template <class T>
Element<T> approximant(const std::vector<Element<T>>& digits, const CFAlgorithm& algo, std::size_t begin,
                       std::size_t end) {
  end = std::min(end, digits.size());
  Element<T> x(algo.algebra);
  for (std::size_t i = end; i-- > begin;) {
    Element<T> s = x + digits[i];
    if (s.is_zero()) throw ZeroDenominator("zero denominator in suffix " + std::to_string(i + 1), i + 1);
    x = algo.inversion.apply_inverse(s);
  }
  return x;
}

namespace {

// tails[i] = T^{-1}_{a_{i+1}} ... T^{-1}_{a_n} 0 for i = 0..n-1 (standard inversion).
template <class T, class InvF>
std::vector<Element<T>> tails_of(const std::vector<Element<T>>& digits, std::size_t n, Algebra a, InvF invf) {
  std::vector<Element<T>> tails(n, Element<T>(a));
  Element<T> x(a);
  for (std::size_t i = n; i-- > 0;) {
    Element<T> s = x + digits[i];
    if (s.is_zero()) throw ZeroDenominator("zero denominator in suffix " + std::to_string(i + 1), i + 1);
    x = invf(s);
    tails[i] = x;
  }
  return tails;
}

}  // namespace

template <class T>
CheckResult verify_lemma_2_2(const std::vector<Element<T>>& digits, Algebra a) {
  CheckResult r;
  auto conv = convergents(digits, a);
  for (std::size_t n = 0; n <= digits.size(); ++n) {
    if (conv[n].Q.is_zero()) {
      r.ok = false;
      r.failed_at = n;
      r.detail = "Q_n = 0";
      return r;
    }
    Element<T> lhs = quotient(conv[n].P, conv[n].Q);
    Element<T> rhs = nested_value(digits, a, 0, n);
    double rel = 0;
    if (!is_close(lhs, rhs, 1e-9, &rel)) {
      r.ok = false;
      r.failed_at = n;
      r.detail = "P Q^-1 = " + pretty(lhs) + " but nested fold = " + pretty(rhs);
      r.worst_relative = std::max(r.worst_relative, rel);
      return r;
    }
    r.worst_relative = std::max(r.worst_relative, rel);
  }
  return r;
}

template <class T>
CheckResult verify_product_is_Q(const std::vector<Element<T>>& digits, Algebra a) {
  CheckResult r;
  auto conv = convergents(digits, a);
  for (std::size_t n = 0; n <= digits.size(); ++n) {
    auto tails = tails_of(digits, n, a, [](const Element<T>& s) { return inv(s); });
    T prod = ScalarTraits<T>::one();
    for (const auto& t : tails) prod *= norm_sq(t);
    T q = norm_sq(conv[n].Q);
    if constexpr (std::is_same_v<T, Rational>) {
      if (prod * q != 1) {
        r.ok = false;
        r.failed_at = n;
        r.detail = "prod |tail|^2 * |Q_n|^2 = " + to_string(Rational(prod * q));
        return r;
      }
    } else {
      double rel = std::fabs(std::sqrt(prod * q) - 1.0);
      r.worst_relative = std::max(r.worst_relative, rel);
      if (rel > 1e-9) {
        r.ok = false;
        r.failed_at = n;
        r.detail = "relative mismatch " + std::to_string(rel);
        return r;
      }
    }
  }
  return r;
}

template <class T>
ErrorReport<T> verify_error_formula(const Expansion<T>& exp, std::size_t n, Algebra a, double tol) {
  if (n > exp.depth()) throw InvalidConfiguration("error formula depth exceeds the expansion");
  ErrorReport<T> r;
  Convergent<T> c = suffix_convergent(exp.digits, 0, n, a);
  T lhs = norm_sq(quotient(c.P, c.Q) - exp.x0);
  T num = ScalarTraits<T>::one();
  for (std::size_t i = 0; i <= n; ++i) num *= norm_sq(exp.iterates[i]);
  T rhs = num / norm_sq(c.Q);
  r.lhs = std::sqrt(as_double(lhs));
  r.rhs = std::sqrt(as_double(rhs));
  if constexpr (std::is_same_v<T, Rational>) {
    r.exact_equal = lhs == rhs;
    r.relative = r.exact_equal ? 0.0 : std::fabs(r.lhs - r.rhs) / std::max(r.rhs, 1e-300);
    r.ok = r.exact_equal;
  } else {
    r.relative = r.lhs == r.rhs ? 0.0 : std::fabs(r.lhs - r.rhs) / std::max(r.rhs, 1e-300);
    r.ok = r.relative <= tol;
  }
  return r;
}

template <class T>
ErrorReport<T> verify_error_route(const Expansion<T>& exp, std::size_t n, const CFAlgorithm& algo, double tol) {
  if (n > exp.depth()) throw InvalidConfiguration("error formula depth exceeds the expansion");
  ErrorReport<T> r;
  auto tails = tails_of(exp.digits, n, algo.algebra,
                        [&](const Element<T>& s) { return algo.inversion.apply_inverse(s); });
  Element<T> approx = n == 0 ? Element<T>(algo.algebra) : tails[0];
  T lhs = norm_sq(approx - exp.x0);
  T rhs = ScalarTraits<T>::one();
  for (std::size_t i = 0; i <= n; ++i) rhs *= norm_sq(exp.iterates[i]);
  for (const auto& t : tails) rhs *= norm_sq(t);
  r.lhs = std::sqrt(as_double(lhs));
  r.rhs = std::sqrt(as_double(rhs));
  if constexpr (std::is_same_v<T, Rational>) {
    r.exact_equal = lhs == rhs;
    r.ok = r.exact_equal;
    r.relative = r.exact_equal ? 0.0 : 1.0;
  } else {
    r.relative = r.lhs == r.rhs ? 0.0 : std::fabs(r.lhs - r.rhs) / std::max(r.rhs, 1e-300);
    r.ok = r.relative <= tol;
  }
  return r;
}

template <class T>
CheckResult verify_suffix_denominators(const std::vector<Element<T>>& digits, Algebra a) {
  CheckResult r;
  for (std::size_t n = 1; n <= digits.size(); ++n) {
    std::vector<Element<T>> prefix(digits.begin(), digits.begin() + static_cast<long>(n));
    auto qs = suffix_denominators(prefix, a);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      T ns = norm_sq(qs[i]);
      bool ok;
      if constexpr (std::is_same_v<T, Rational>)
        ok = ns >= 1;
      else
        ok = ns >= 1 - 1e-9;
      if (!ok) {
        r.ok = false;
        r.failed_at = n;
        r.detail = "|Q[a_" + std::to_string(i + 1) + "..a_" + std::to_string(n) + "]|^2 = " +
                   std::to_string(as_double(ns));
        return r;
      }
    }
  }
  return r;
}

template <class T>
CheckResult verify_forward_backward(const std::vector<Element<T>>& digits, Algebra a) {
  CheckResult r;
  auto f = convergents_forward(digits, a);
  auto b = convergents_backward(digits, a);
  for (std::size_t n = 0; n < f.size(); ++n) {
    double rel = 0, rel2 = 0;
    if (!is_close(f[n].P, b[n].P, 1e-9, &rel) || !is_close(f[n].Q, b[n].Q, 1e-9, &rel2)) {
      r.ok = false;
      r.failed_at = n;
      r.detail = "forward (" + pretty(f[n].P) + ", " + pretty(f[n].Q) + ") vs backward (" + pretty(b[n].P) + ", " +
                 pretty(b[n].Q) + ")";
      return r;
    }
    r.worst_relative = std::max({r.worst_relative, rel, rel2});
  }
  return r;
}

template <class T>
CheckResult verify_matrix_product(const std::vector<Element<T>>& digits, Algebra a) {
  if (!is_commutative(a)) throw InvalidConfiguration("the 2x2 determinant check needs a commutative algebra");
  CheckResult r;
  auto conv = convergents_backward(digits, a);
  using E = Element<T>;
  E m00 = E::one(a), m01(a), m10(a), m11 = E::one(a);
  for (std::size_t n = 1; n <= digits.size(); ++n) {
    const E& d = digits[n - 1];
    // [[m00, m01], [m10, m11]] * [[0, 1], [1, d]]
    E n00 = m01, n01 = m00 + mul(m01, d);
    E n10 = m11, n11 = m10 + mul(m11, d);
    m00 = n00;
    m01 = n01;
    m10 = n10;
    m11 = n11;
    E det = mul(m00, m11) - mul(m01, m10);
    E expected = E::one(a);
    if (n % 2) expected = -expected;
    double rel = 0;
    bool ok = is_close(m01, conv[n].P, 1e-9, &rel) && is_close(m11, conv[n].Q, 1e-9, &rel) &&
              is_close(m00, conv[n - 1].P, 1e-9, &rel) && is_close(m10, conv[n - 1].Q, 1e-9, &rel) &&
              is_close(det, expected, 1e-9, &rel);
    if (!ok) {
      r.ok = false;
      r.failed_at = n;
      r.detail = "matrix product disagrees with the convergents (det = " + pretty(det) + ")";
      return r;
    }
  }
  return r;
}

template <class T>
bool verify_dani_hypothesis(const Expansion<T>& exp) {
  for (bool b : exp.dani)
    if (!b) return false;
  return true;
}

template <class T>
Theorem15Evidence theorem_1_5_evidence(const Expansion<T>& exp, const Order& order, double search_radius) {
  Theorem15Evidence ev;
  std::vector<double> zero(order.dim(), 0.0);
  std::set<Rational> exact_norms;
  std::vector<double> float_norms;
  for (const auto& c : points_within(order, FloatElement(order.algebra(), zero), search_radius)) {
    if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; })) continue;
    if constexpr (std::is_same_v<T, Rational>) {
      if (order.is_rational()) {
        exact_norms.insert(norm_sq(order.exact_point(c)));
        continue;
      }
    }
    float_norms.push_back(norm_sq(order.point(c)));
  }
  ev.lattice_norms_checked = exact_norms.size() + float_norms.size();
  T prod_sq = ScalarTraits<T>::one();
  double prev = INFINITY;
  for (const auto& x : exp.iterates) {
    prod_sq *= norm_sq(x);
    double p = std::sqrt(as_double(prod_sq));
    ev.running_product.push_back(p);
    if (p > prev * (1 + 1e-12)) ev.product_decreasing = false;
    prev = p;
    if constexpr (std::is_same_v<T, Rational>) {
      if (exact_norms.count(prod_sq)) ev.condition_one = false;
    }
    for (double nf : float_norms)
      if (std::fabs(as_double(prod_sq) - nf) <= 1e-12 * nf) ev.condition_one = false;
  }
  ev.product_reaches_zero = !exp.iterates.empty() && exp.iterates.back().is_zero();
  return ev;
}

#define CFRAC_INSTANTIATE(T)                                                                                      \
  template LatticePoint<T> reduce_into<T>(const Order&, const Domain&, const Element<T>&, std::size_t);          \
  template GaussStep<T> gauss_step<T>(const Element<T>&, const CFAlgorithm&, std::size_t);                       \
  template Expansion<T> expand<T>(const Element<T>&, std::size_t, const CFAlgorithm&);                          \
  template Convergent<T> suffix_convergent<T>(const std::vector<Element<T>>&, std::size_t, std::size_t, Algebra); \
  template std::vector<Element<T>> suffix_denominators<T>(const std::vector<Element<T>>&, Algebra);              \
  template std::vector<Convergent<T>> convergents_backward<T>(const std::vector<Element<T>>&, Algebra);          \
  template std::vector<Convergent<T>> convergents_forward<T>(const std::vector<Element<T>>&, Algebra);           \
  template std::vector<Convergent<T>> convergents<T>(const std::vector<Element<T>>&, Algebra);                   \
  template Element<T> nested_value<T>(const std::vector<Element<T>>&, Algebra, std::size_t, std::size_t);        \
  template Element<T> approximant<T>(const std::vector<Element<T>>&, const CFAlgorithm&, std::size_t,            \
                                     std::size_t);                                                              \
  template CheckResult verify_lemma_2_2<T>(const std::vector<Element<T>>&, Algebra);                             \
  template CheckResult verify_product_is_Q<T>(const std::vector<Element<T>>&, Algebra);                          \
  template ErrorReport<T> verify_error_formula<T>(const Expansion<T>&, std::size_t, Algebra, double);            \
  template ErrorReport<T> verify_error_route<T>(const Expansion<T>&, std::size_t, const CFAlgorithm&, double);   \
  template CheckResult verify_suffix_denominators<T>(const std::vector<Element<T>>&, Algebra);                   \
  template CheckResult verify_forward_backward<T>(const std::vector<Element<T>>&, Algebra);                      \
  template CheckResult verify_matrix_product<T>(const std::vector<Element<T>>&, Algebra);                        \
  template bool verify_dani_hypothesis<T>(const Expansion<T>&);                                                 \
  template Theorem15Evidence theorem_1_5_evidence<T>(const Expansion<T>&, const Order&, double);

CFRAC_INSTANTIATE(Rational)
CFRAC_INSTANTIATE(double)

#undef CFRAC_INSTANTIATE

}  // namespace cfrac
