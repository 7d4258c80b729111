#include "cfrac/audits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cfrac/errors.hpp"

namespace cfrac {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Orthonormal frame of the span of the lattice, in algebra coordinates.
std::vector<FloatElement> span_frame(const Order& L) {
  std::vector<FloatElement> out;
  const DMatrix& B = L.float_basis();
  for (std::size_t j = 0; j < B.cols(); ++j) {
    FloatElement v(L.algebra(), B.column(j));
    for (const auto& e : out) v = v - scale(e, dot(v, e));
    double n = norm(v);
    if (n < 1e-12) continue;
    out.push_back(scale(v, 1.0 / n));
  }
  return out;
}

// Uniform point of {x in span : |x - c| = r, x . g = c . g}.
FloatElement sample_small_sphere(const FloatElement& c, double r, const FloatElement& g,
                                 const std::vector<FloatElement>& frame, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  if (r <= 0) return c;
  const double gn = norm(g);
  for (int attempt = 0; attempt < 64; ++attempt) {
    FloatElement u(c.algebra());
    for (const auto& e : frame) u = u + scale(e, N(rng));
    if (gn > 0) u = u - scale(g, dot(u, g) / (gn * gn));
    double n = norm(u);
    if (n > 1e-9) return c + scale(u, r / n);
  }
  throw Error("could not sample a sphere of dimension zero");
}

bool in_lattice(const Order& L, const FloatElement& x, double tol, FloatElement* snapped) {
  auto p = nearest(L, x);
  if (snapped) *snapped = p.value;
  return norm(p.value - x) <= tol;
}

// iota on the unit circle as t -> sigma t + phi.
struct CircleAction {
  int sigma = 1;
  double phi = 0;
};

double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

FloatElement on_circle(double t) { return FloatElement(Algebra::C, {std::cos(t), std::sin(t)}); }
double angle_of(const FloatElement& z) { return wrap(std::atan2(z[1], z[0])); }

CircleAction circle_action(const Inversion& iota) {
  CircleAction a;
  a.phi = angle_of(iota.apply(FloatElement::one(Algebra::C)));
  double t = angle_of(iota.apply(on_circle(std::numbers::pi / 2)));
  double plus = std::fabs(std::remainder(t - (a.phi + std::numbers::pi / 2), kTwoPi));
  a.sigma = plus < 1e-9 ? 1 : -1;
  return a;
}

// Angles where closure(K) boundary curves meet the unit circle.
std::vector<double> breakpoints(const Domain& K) {
  std::vector<double> ts;
  auto line = [&](double wx, double wy, double c) {
    double m = std::hypot(wx, wy);
    if (m < 1e-15 || std::fabs(c) > m * (1 + 1e-12)) return;
    double w = std::atan2(wy, wx), d = std::acos(std::clamp(c / m, -1.0, 1.0));
    ts.push_back(wrap(w + d));
    ts.push_back(wrap(w - d));
  };
  switch (K.kind()) {
    case DomainKind::Box: {
      const auto& f = K.frame();
      DMatrix F(2, 2);
      for (std::size_t j = 0; j < 2; ++j) {
        FloatElement fj = to_float(f[j]);
        F(0, j) = fj[0];
        F(1, j) = fj[1];
      }
      auto Fi = inverse(F);
      if (!Fi) throw InvalidConfiguration("degenerate box frame");
      for (std::size_t i = 0; i < 2; ++i) {
        line((*Fi)(i, 0), (*Fi)(i, 1), K.bounds()[i].lo.to_double());
        line((*Fi)(i, 0), (*Fi)(i, 1), K.bounds()[i].hi.to_double());
      }
      break;
    }
    case DomainKind::Chevron:
      line(0, 1, 0.5);
      line(0, 1, -0.5);
      line(1, 0, 0.5);  // |x - 1| = 1 meets |x| = 1 on Re x = 1/2
      break;
    case DomainKind::Dirichlet:
      for (const auto& c : relevant_vectors(*K.order())) {
        FloatElement g = K.order()->point(c);
        line(g[0], g[1], norm_sq(g) / 2);
      }
      break;
  }
  std::sort(ts.begin(), ts.end());
  std::vector<double> out;
  for (double t : ts)
    if (out.empty() || t - out.back() > 1e-12) out.push_back(t);
  if (out.size() > 1 && out.front() + kTwoPi - out.back() < 1e-12) out.pop_back();
  return out;
}

bool arc_contains(const SphereArc& a, double t, double tol) {
  double rel = wrap(t - a.lo);
  return rel <= (a.hi - a.lo) + tol || rel >= kTwoPi - tol;
}

struct CirclePart {
  std::vector<double> points;
  std::vector<SphereArc> arcs;
};

CirclePart circle_part(const Domain& K, double tol) {
  CirclePart part;
  std::vector<double> bp = breakpoints(K);
  if (bp.empty()) {
    if (closure_contains(K, on_circle(0.0), tol)) part.arcs.push_back({0.0, kTwoPi});
    return part;
  }
  const std::size_t m = bp.size();
  std::vector<bool> gap_in(m);
  for (std::size_t i = 0; i < m; ++i) {
    double a = bp[i], b = i + 1 < m ? bp[i + 1] : bp[0] + kTwoPi;
    gap_in[i] = closure_contains(K, on_circle((a + b) / 2), tol);
  }
  if (std::all_of(gap_in.begin(), gap_in.end(), [](bool b) { return b; })) {
    part.arcs.push_back({0.0, kTwoPi});
    return part;
  }
  // Walk the breakpoints after an outside gap; runs of inside gaps are arcs.
  std::size_t start = 0;
  while (gap_in[start]) ++start;
  const double base = bp[start];
  auto unwrapped = [&](std::size_t i) {
    if (i == start) return base + kTwoPi;
    return bp[i] < base ? bp[i] + kTwoPi : bp[i];
  };
  std::size_t k = 1;
  while (k <= m) {
    std::size_t i = (start + k) % m;
    if (!gap_in[i]) {
      if (closure_contains(K, on_circle(bp[i]), tol)) part.points.push_back(bp[i]);
      ++k;
      continue;
    }
    std::size_t j = k;
    while (gap_in[(start + j) % m]) ++j;
    part.arcs.push_back({unwrapped(i), unwrapped((start + j) % m)});
    k = j + 1;
  }
  return part;
}

void add_point(std::vector<double>& pts, double t) {
  t = wrap(t);
  for (double p : pts)
    if (std::fabs(std::remainder(p - t, kTwoPi)) < 1e-9) return;
  pts.push_back(t);
}

}  // namespace

bool closure_contains(const Domain& K, const FloatElement& x, double tol) {
  switch (K.kind()) {
    case DomainKind::Chevron: {
      double b = x[1];
      double r1 = norm(x), r2 = norm(x - FloatElement::one(Algebra::C));
      return std::fabs(b) <= 0.5 + tol && r1 <= 1 + tol && r2 >= 1 - tol;
    }
    case DomainKind::Dirichlet: {
      for (const auto& c : relevant_vectors(*K.order())) {
        FloatElement g = K.order()->point(c);
        if (dot(x, g) > norm_sq(g) / 2 + tol) return false;
      }
      return true;
    }
    case DomainKind::Box: {
      const auto& f = K.frame();
      const std::size_t d = dimension(K.algebra()), m = f.size();
      DMatrix F(d, m);
      for (std::size_t j = 0; j < m; ++j) {
        FloatElement fj = to_float(f[j]);
        for (std::size_t i = 0; i < d; ++i) F(i, j) = fj[i];
      }
      std::vector<double> t = solve_least_squares(F, x.coeffs());
      FloatElement back(K.algebra());
      for (std::size_t j = 0; j < m; ++j) back = back + scale(to_float(f[j]), t[j]);
      if (norm(back - x) > tol) return false;
      for (std::size_t j = 0; j < m; ++j)
        if (t[j] < K.bounds()[j].lo.to_double() - tol || t[j] > K.bounds()[j].hi.to_double() + tol) return false;
      return true;
    }
  }
  return false;
}

NormalizingReport sphere_normalizing_audit(const Inversion& iota, const Order& L, std::size_t samples,
                                           double gamma_radius, unsigned long seed, double tol) {
  if (iota.algebra() != L.algebra()) throw AlgebraMismatch("inversion and lattice live in different algebras");
  NormalizingReport rep;
  std::mt19937_64 rng(seed);
  const auto frame = span_frame(L);
  const Algebra a = L.algebra();
  FloatElement zero(a);
  auto fail = [&](const FloatElement& g, const FloatElement& s, const FloatElement& y, std::string why) {
    rep.pass = false;
    rep.failures.push_back({g, s, y, std::move(why)});
  };
  for (const auto& c : points_within(L, zero, gamma_radius + 1e-9)) {
    FloatElement g = L.point(c);
    const double gn = norm(g);
    if (gn > gamma_radius + 1e-9) continue;
    ++rep.gammas_checked;
    if (gn > 2 + tol) {
      rep.matches.push_back({g, g});
      continue;
    }
    // iota gamma iota s in S  <=>  w = iota s in S ∩ (S - gamma)
    const FloatElement wc = scale(g, -0.5);
    const double wr = std::sqrt(std::max(0.0, 1 - gn * gn / 4));
    if (wr >= tol && frame.size() <= 1) {
      // S ∩ (S - gamma) is empty on a line; gamma' = gamma satisfies both clauses
      rep.matches.push_back({g, g});
      continue;
    }
    const std::size_t count = wr < tol ? 1 : samples;
    std::optional<FloatElement> delta;
    bool ok = true;
    for (std::size_t k = 0; k < count && ok; ++k) {
      FloatElement w = sample_small_sphere(wc, wr, g, frame, rng);
      FloatElement s = iota.apply_inverse(w);
      FloatElement y = iota.apply(w + g);
      ++rep.samples_checked;
      if (std::fabs(norm(y) - 1) > tol) {
        fail(g, s, y, "iota gamma iota s leaves the sphere");
        ok = false;
        break;
      }
      FloatElement d = y - s;
      if (!delta) {
        FloatElement snapped(a);
        if (!in_lattice(L, d, tol, &snapped)) {
          fail(g, s, y, "iota gamma iota s - s is not in the lattice");
          ok = false;
          break;
        }
        delta = snapped;
      } else if (norm(d - *delta) > tol) {
        fail(g, s, y, "iota gamma iota s - s is not constant");
        ok = false;
      }
    }
    if (!ok) continue;
    // Converse: gamma' s in S forces iota gamma iota s in S.
    const double dn = norm(*delta);
    if (dn > 2 + tol) {
      fail(g, iota.apply_inverse(wc), iota.apply(wc + g), "gamma' s never lies on the sphere");
      continue;
    }
    const FloatElement sc = scale(*delta, -0.5);
    const double sr = std::sqrt(std::max(0.0, 1 - dn * dn / 4));
    const std::size_t back = sr < tol ? 1 : samples;
    for (std::size_t k = 0; k < back && ok; ++k) {
      FloatElement s = sample_small_sphere(sc, sr, *delta, frame, rng);
      FloatElement y = iota.apply(iota.apply(s) + g);
      ++rep.samples_checked;
      if (norm(y - (s + *delta)) > tol) {
        fail(g, s, y, "gamma' s is on the sphere but iota gamma iota s differs");
        ok = false;
      }
    }
    if (ok) rep.matches.push_back({g, *delta});
  }
  return rep;
}

std::string FinitenessReport::verdict() const {
  if (!supported) return "UNSUPPORTED";
  return condition_finite ? "FINITE" : "NOT-FINITE";
}

FinitenessReport finiteness_audit(const Domain& K, const Order& L, const Inversion& iota, double tol) {
  FinitenessReport rep;
  if (K.sup_norm() < 1 - tol) {
    rep.note = "closure(K) lies inside the open unit ball; closure(K) ∩ S is empty";
    return rep;
  }
  const Algebra a = K.algebra();
  if (a == Algebra::R) {
    for (double t : {1.0, -1.0}) {
      FloatElement s(a, {t});
      if (closure_contains(K, s, tol)) rep.points.push_back(s);
    }
    const FloatElement zero(a);
    for (const auto& s : rep.points) {
      FloatElement is = iota.apply(s);
      for (const auto& c : points_within(L, zero, 2 + 1e-9)) {
        FloatElement y = is + L.point(c);
        if (std::fabs(norm(y) - 1) <= tol && closure_contains(K, y, tol)) {
          rep.condition_points.push_back(s);
          break;
        }
      }
    }
    rep.note = "closure(K) ∩ S inside {-1, 1}";
    return rep;
  }
  if (a != Algebra::C || L.algebra() != Algebra::C) {
    rep.supported = false;
    rep.note = "closure(K) ∩ S is only computed for K in R or C";
    return rep;
  }
  CirclePart part = circle_part(K, tol);
  for (double t : part.points) rep.points.push_back(on_circle(t));
  rep.arcs = part.arcs;
  rep.sphere_part_finite = part.arcs.empty();

  const CircleAction act = circle_action(iota);
  auto in_part = [&](double t) {
    for (const auto& arc : part.arcs)
      if (arc_contains(arc, t, 1e-12)) return true;
    for (double p : part.points)
      if (std::fabs(std::remainder(p - t, kTwoPi)) < 1e-9) return true;
    return false;
  };
  auto good = [&](double t, const FloatElement& g) {
    FloatElement y = iota.apply(on_circle(t)) + g;
    return std::fabs(norm(y) - 1) <= tol && closure_contains(K, y, tol);
  };
  std::vector<double> cond;
  const FloatElement zero(a);
  std::vector<FloatElement> gammas;
  for (const auto& c : points_within(L, zero, 2 + 1e-9)) gammas.push_back(L.point(c));
  for (double t : part.points)
    for (const auto& g : gammas)
      if (good(t, g)) {
        add_point(cond, t);
        break;
      }
  for (const auto& arc : part.arcs) {
    for (const auto& g : gammas) {
      const double gn = norm(g);
      if (gn < 1e-12) {
        // iota(arc) overlaps closure(K) ∩ S on a set of positive length?
        const int steps = 4096;
        int hits = 0;
        for (int k = 0; k <= steps; ++k) {
          double t = arc.lo + (arc.hi - arc.lo) * k / steps;
          if (good(t, g)) {
            ++hits;
            if (hits > 2) break;
          }
        }
        if (hits > 2) {
          rep.condition_arcs.push_back(arc);
          rep.condition_finite = false;
        }
        continue;
      }
      if (gn > 2 + tol) continue;
      // |e^{i psi} + g| = 1  <=>  cos(psi - arg g) = -|g| / 2
      double ag = std::atan2(g[1], g[0]), d = std::acos(std::clamp(-gn / 2, -1.0, 1.0));
      for (double psi : {ag + d, ag - d}) {
        double t = wrap((psi - act.phi) * act.sigma);
        if (arc_contains(arc, t, 1e-12) && good(t, g)) add_point(cond, t);
      }
    }
  }
  for (double t : cond)
    if (in_part(t)) rep.condition_points.push_back(on_circle(t));
  rep.note = rep.sphere_part_finite ? "closure(K) ∩ S is finite" : "closure(K) ∩ S contains an arc";
  return rep;
}

}  // namespace cfrac
