#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "cfrac/audits.hpp"
#include "cfrac/boundary.hpp"
#include "cfrac/catalog.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/iwasawa.hpp"
#include "cfrac/random.hpp"
#include "cfrac/serialize.hpp"
#include "cfrac_cli/app.hpp"

namespace cfrac::cli {

namespace {

constexpr std::size_t kExactDepth = 12;

struct Tally {
  std::size_t runs = 0, failures = 0;
  double worst = 0;
  std::string first;

  void add(bool ok, const std::string& what, double rel = 0) {
    ++runs;
    worst = std::max(worst, rel);
    if (!ok && failures++ == 0) first = what;
  }
  json measured() const { return json{{"runs", runs}, {"failures", failures}, {"worst_relative", worst}}; }
};

void finish(RunReport& r, const std::string& name, const Tally& t, const std::string& tol) {
  r.check(name, t.failures == 0 && t.runs > 0, t.measured(), tol, t.failures ? t.first : "");
}

std::vector<CFAlgorithm> cf_algorithms(const RunConfig& cfg, std::vector<std::string> defaults) {
  std::vector<CFAlgorithm> out;
  if (!cfg.algo.empty()) {
    out.push_back(resolve_algorithm(canonical_algorithm_name(cfg.algo)));
    return out;
  }
  for (const auto& n : defaults) out.push_back(catalog_algorithm(n));
  return out;
}

const std::vector<std::string> kIdentityAlgos = {"regular", "hurwitz-A", "quat-hurwitz", "quat-lipschitz",
                                                  "oct-cayley"};

std::vector<Algebra> algebras(const RunConfig& cfg) {
  if (!cfg.algebra.empty()) return {parse_algebra(cfg.algebra)};
  return {Algebra::R, Algebra::C, Algebra::H, Algebra::O};
}

// Applies f to `trials` exact expansions (float ones for float-only algorithms).
void each_expansion(const RunConfig& cfg, const std::vector<CFAlgorithm>& algos,
                    const std::function<void(const CFAlgorithm&, const Expansion<Rational>*, const Expansion<double>*)>& f) {
  std::mt19937_64 rng(cfg.seed);
  const std::size_t depth = cfg.depth ? std::min(cfg.depth, kExactDepth) : kExactDepth;
  for (const auto& algo : algos)
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      if (algo.exact_capable()) {
        auto exp = expand(algo.domain.sample_exact(rng), depth, algo);
        f(algo, &exp, nullptr);
      } else {
        auto exp = expand(algo.domain.sample(rng), depth, algo);
        f(algo, nullptr, &exp);
      }
    }
}

void suite_lemma22(RunReport& r, const RunConfig& cfg) {
  Tally t;
  each_expansion(cfg, cf_algorithms(cfg, kIdentityAlgos), [&](const CFAlgorithm& a, auto* e, auto* f) {
    auto res = e ? verify_lemma_2_2(e->digits, a.algebra) : verify_lemma_2_2(f->digits, a.algebra);
    t.add(res.ok, a.name + ": " + res.detail, res.worst_relative);
  });
  finish(r, "convergent quotient equals nested fold", t, "exact");
}

void suite_lemma23(RunReport& r, const RunConfig& cfg) {
  Tally t;
  each_expansion(cfg, cf_algorithms(cfg, kIdentityAlgos), [&](const CFAlgorithm& a, auto* e, auto* f) {
    auto res = e ? verify_product_is_Q(e->digits, a.algebra) : verify_product_is_Q(f->digits, a.algebra);
    t.add(res.ok, a.name + ": " + res.detail, res.worst_relative);
  });
  finish(r, "suffix-norm product equals 1/|Q_n|", t, "exact");
}

void suite_cor24(RunReport& r, const RunConfig& cfg) {
  Tally conv, route;
  each_expansion(cfg, cf_algorithms(cfg, kIdentityAlgos), [&](const CFAlgorithm& a, auto* e, auto* f) {
    const std::size_t n = e ? e->depth() : f->depth();
    for (std::size_t k = 1; k <= n; ++k) {
      if (a.inversion.kind() == InversionKind::Standard) {
        if (e) {
          auto rep = verify_error_formula(*e, k, a.algebra);
          conv.add(rep.exact_equal, a.name + " depth " + std::to_string(k), rep.relative);
        } else {
          auto rep = verify_error_formula(*f, k, a.algebra);
          conv.add(rep.ok, a.name + " depth " + std::to_string(k), rep.relative);
        }
      }
      if (e) {
        auto rep = verify_error_route(*e, k, a);
        route.add(rep.exact_equal, a.name + " depth " + std::to_string(k), rep.relative);
      } else {
        auto rep = verify_error_route(*f, k, a);
        route.add(rep.ok, a.name + " depth " + std::to_string(k), rep.relative);
      }
    }
  });
  if (conv.runs) finish(r, "error formula via convergents", conv, "exact (float 1e-9)");
  finish(r, "error formula via tails", route, "exact (float 1e-9)");
}

void suite_lemma25(RunReport& r, const RunConfig& cfg) {
  Tally t;
  each_expansion(cfg, cf_algorithms(cfg, kIdentityAlgos), [&](const CFAlgorithm& a, auto* e, auto* f) {
    auto res = e ? verify_suffix_denominators(e->digits, a.algebra) : verify_suffix_denominators(f->digits, a.algebra);
    t.add(res.ok, a.name + ": " + res.detail);
  });
  finish(r, "suffix Q nonzero with |Q|^2 >= 1", t, "exact");
}

void suite_forward_backward(RunReport& r, const RunConfig& cfg) {
  Tally fb, mat;
  each_expansion(cfg, cf_algorithms(cfg, kIdentityAlgos), [&](const CFAlgorithm& a, auto* e, auto* f) {
    if (!is_associative(a.algebra)) return;
    auto res = e ? verify_forward_backward(e->digits, a.algebra) : verify_forward_backward(f->digits, a.algebra);
    fb.add(res.ok, a.name + ": " + res.detail);
    if (is_commutative(a.algebra)) {
      auto m = e ? verify_matrix_product(e->digits, a.algebra) : verify_matrix_product(f->digits, a.algebra);
      mat.add(m.ok, a.name + ": " + m.detail);
    }
  });
  if (fb.runs) finish(r, "forward recursion equals backward chain", fb, "exact");
  if (mat.runs) finish(r, "2x2 matrix product and determinant", mat, "exact");
}

void suite_dani(RunReport& r, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const std::size_t depth = cfg.depth ? cfg.depth : 200;
  for (const auto& algo : cf_algorithms(cfg, {"hurwitz-A", "hurwitz-J", "chevron", "quat-lipschitz",
                                              "quat-hurwitz-1pi", "oct-cayley-1pe1"})) {
    Tally t;
    double max_norm = 0;
    std::size_t near_one = 0;
    for (std::size_t k = 0; k < cfg.trials; ++k) {
      auto exp = expand(algo.domain.sample(rng), depth, algo);
      for (double n : exp.norms) {
        max_norm = std::max(max_norm, n);
        if (n > 0.99) ++near_one;
      }
      t.add(verify_dani_hypothesis(exp), "trial " + std::to_string(k));
    }
    json m = t.measured();
    m["max_norm"] = max_norm;
    m["iterates_above_0.99"] = near_one;
    r.check("dani ledger " + algo.name, t.failures == 0, m, "|x_i| < 1", t.failures ? t.first : "");
  }
}

void suite_convergence(RunReport& r, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const std::size_t depth = cfg.depth ? cfg.depth : 40;
  for (const auto& algo :
       cf_algorithms(cfg, {"hurwitz-A", "hurwitz-J", "chevron", "quat-lipschitz", "oct-cayley-1pe1"})) {
    Tally t;
    double worst = 0;
    for (std::size_t k = 0; k < cfg.trials; ++k) {
      FloatElement x0 = algo.domain.sample(rng);
      auto exp = expand(x0, depth, algo);
      double err = norm(approximant(exp.digits, algo) - x0);
      worst = std::max(worst, err);
      t.add(err < 1e-6 && verify_dani_hypothesis(exp), serialize(x0));
    }
    json m = t.measured();
    m["worst_error"] = worst;
    r.check("convergence by n = " + std::to_string(depth) + " " + algo.name, t.failures == 0, m, "1e-6",
            t.failures ? t.first : "");
  }
}

void suite_theorem15(RunReport& r, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  for (const auto& algo : cf_algorithms(cfg, {"regular", "hurwitz-A", "quat-hurwitz"})) {
    Tally t;
    for (std::size_t k = 0; k < cfg.trials; ++k) {
      auto exp = expand(algo.domain.sample(rng), cfg.depth ? cfg.depth : 30, algo);
      auto ev = theorem_1_5_evidence(exp, *algo.order, 4.0);
      t.add(ev.condition_one && ev.product_decreasing, "trial " + std::to_string(k));
    }
    r.check("nonconvergence criterion finite-prefix evidence " + algo.name, t.failures == 0, t.measured(),
            "EVIDENCE (finite prefix, not a proof)", t.first);
  }
}

void suite_inversion_identity(RunReport& r, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  for (Algebra a : algebras(cfg)) {
    Tally ex, fl;
    for (std::size_t k = 0; k < cfg.trials; ++k) {
      ExactElement x = random_exact_nonzero(a, rng), y = random_exact_nonzero(a, rng);
      Rational lhs = norm_sq(x - y), rhs = norm_sq(inv(x) - inv(y)) * norm_sq(x) * norm_sq(y);
      ex.add(lhs == rhs, serialize(x) + ", " + serialize(y));
      FloatElement u = random_float(a, rng), v = random_float(a, rng);
      double l = norm(u - v), rr = norm(inv(u) - inv(v)) * norm(u) * norm(v);
      double rel = std::fabs(l - rr) / std::max(l, 1e-300);
      fl.add(rel <= 1e-10, serialize(u) + ", " + serialize(v), rel);
    }
    finish(r, std::string("inversion identity exact ") + algebra_name(a), ex, "exact squared");
    finish(r, std::string("inversion identity float ") + algebra_name(a), fl, "1e-10");
  }
}

void suite_algebra(RunReport& r, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  for (Algebra a : algebras(cfg)) {
    Tally mult, alt, assoc, anti, agree;
    for (std::size_t k = 0; k < cfg.trials; ++k) {
      ExactElement x = random_exact(a, rng), y = random_exact(a, rng), z = random_exact(a, rng);
      mult.add(norm_sq(x * y) == norm_sq(x) * norm_sq(y), serialize(x) + ", " + serialize(y));
      if (a == Algebra::O) {
        alt.add(x * (x * y) == (x * x) * y && (y * x) * x == y * (x * x), serialize(x) + ", " + serialize(y));
      } else {
        assoc.add((x * y) * z == x * (y * z), serialize(x));
      }
      if (a == Algebra::H) anti.add(conj(x * y) == conj(y) * conj(x), serialize(x));
      std::uniform_int_distribution<long> c(-512, 512);
      ExactElement p(a), q(a);
      for (std::size_t i = 0; i < dimension(a); ++i) p[i] = make_rational(c(rng), 64), q[i] = make_rational(c(rng), 64);
      FloatElement pf = to_float(p) * to_float(q), pe = to_float(p * q);
      double rel = norm(pf - pe) / std::max(norm(pe), 1e-300);
      agree.add(rel <= 1e-12, serialize(p), rel);
    }
    const std::string an = algebra_name(a);
    finish(r, "norm multiplicativity " + an, mult, "exact");
    if (a == Algebra::O) finish(r, "alternative laws O", alt, "exact");
    else finish(r, "associativity " + an, assoc, "exact");
    if (a == Algebra::H) finish(r, "conj anti-automorphism H", anti, "exact");
    finish(r, "float and exact products agree " + an, agree, "1e-12");
    if (a == Algebra::O) {
      ExactElement e1 = ExactElement::basis(a, 1), e2 = ExactElement::basis(a, 2), e4 = ExactElement::basis(a, 4);
      ExactElement lhs = (e1 * e2) * e4, rhs = e1 * (e2 * e4);
      r.check("nonassociativity witness (e1 e2) e4 != e1 (e2 e4)", lhs != rhs,
              json{{"lhs", serialize(lhs)}, {"rhs", serialize(rhs)}}, "exact");
    }
  }
}

template <class T>
bool group_axioms(const IwasawaSpace& X, const IwasawaPoint<T>& p, const IwasawaPoint<T>& q,
                  const IwasawaPoint<T>& s) {
  auto e = identity_point<T>(X);
  return group_mul(X, group_mul(X, p, q), s) == group_mul(X, p, group_mul(X, q, s)) && group_mul(X, e, p) == p &&
         group_mul(X, p, e) == p && group_mul(X, p, group_inverse(X, p)) == e &&
         group_mul(X, group_inverse(X, p), p) == e;
}

void suite_iwasawa(RunReport& r, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<IwasawaSpace> spaces = {IwasawaSpace::make(Algebra::C, 1), IwasawaSpace::make(Algebra::H, 1),
                                      IwasawaSpace::make(Algebra::R, 3)};
  for (const auto& n : iwasawa_algorithm_names()) spaces.push_back(iwasawa_algorithm(n).space);
  for (const auto& X : spaces) {
    Tally axioms, recip, lemma_ex, lemma_fl;
    for (std::size_t k = 0; k < cfg.trials; ++k) {
      auto p = random_point_exact(X, rng), q = random_point_exact(X, rng), s = random_point_exact(X, rng);
      axioms.add(group_axioms(X, p, q, s), serialize(X, p));
      if (!p.v.is_zero()) recip.add(gauge4(koranyi_inversion(X, p)) * gauge4(p) == 1, serialize(X, p));
      if (!p.v.is_zero() && !q.v.is_zero()) {
        auto rep = verify_inversion_identity(X, p, q);
        lemma_ex.add(rep.ok, serialize(X, p) + ", " + serialize(X, q));
      }
      auto fp = random_point(X, rng), fq = random_point(X, rng);
      auto rep = verify_inversion_identity(X, fp, fq, 1e-10);
      lemma_fl.add(rep.ok, serialize(X, fp), rep.relative);
    }
    const std::string xs = X.describe();
    finish(r, "group axioms " + xs, axioms, "exact");
    finish(r, "gauge reciprocity " + xs, recip, "exact");
    finish(r, "koranyi inversion identity exact " + xs, lemma_ex, "exact fourth powers");
    finish(r, "koranyi inversion identity float " + xs, lemma_fl, "1e-10");
  }
  for (const auto& name : iwasawa_algorithm_names()) {
    auto algo = iwasawa_algorithm(name);
    const auto& X = algo.space;
    Tally nt, routes, err, suffix, integ;
    for (std::size_t k = 0; k < cfg.trials; ++k) {
      auto exp = iwasawa_expand(sample_point_exact(algo, rng), algo, cfg.depth ? cfg.depth : 10);
      auto a = verify_null_triples(X, exp.digits);
      nt.add(a.ok, a.detail);
      auto b = verify_qrp_routes(X, exp.digits);
      routes.add(b.ok, b.detail);
      auto c = verify_iwasawa_suffix_denominators(X, exp.digits);
      suffix.add(c.ok, c.detail);
      integ.add(verify_integrality(algo, exp), serialize(X, exp.x0));
      for (std::size_t n = 1; n <= exp.depth(); ++n) {
        auto e = verify_iwasawa_error(exp, n, X);
        err.add(e.exact_equal, serialize(X, exp.x0) + " depth " + std::to_string(n));
      }
    }
    finish(r, "null triples " + name, nt, "exact");
    finish(r, "backward recursion equals B-matrix product " + name, routes, "exact");
    finish(r, "suffix |Q| >= 1 " + name, suffix, "exact");
    finish(r, "integrality of Q_n, P_n " + name, integ, "exact");
    if (err.runs) finish(r, "iwasawa error formula exact " + name, err, "exact fourth powers");
  }
  // d(P_n Q_n^{-1}, x_0) is evaluated from O(1) coordinates, so its relative
  // error is bounded below by about eps / d^2.
  auto algo = iwasawa_algorithm("x1h");
  Tally fl;
  std::size_t floor_governed = 0, strict_failures = 0;
  for (std::size_t k = 0; k < cfg.trials; ++k) {
    auto exp = iwasawa_expand(sample_point(algo, rng), algo, 15);
    for (std::size_t n = 1; n <= exp.depth(); ++n) {
      auto e = verify_iwasawa_error(exp, n, algo.space, 1e-9);
      const double floor = 64 * std::numeric_limits<double>::epsilon() / (e.lhs * e.lhs);
      if (!e.ok) ++strict_failures;
      if (!e.ok && e.relative <= floor) ++floor_governed;
      fl.add(e.ok || e.relative <= floor, serialize(algo.space, exp.x0) + " depth " + std::to_string(n), e.relative);
    }
  }
  json m = fl.measured();
  m["strict_1e-9_failures"] = strict_failures;
  m["cancellation_floor_governed"] = floor_governed;
  r.check("iwasawa error formula float x1h depth 15", fl.failures == 0, m, "1e-9 or 64 eps/d^2", fl.first);
}

QMatrix conjugation(std::size_t n) {
  QMatrix M = QMatrix::identity(n);
  for (std::size_t i = 1; i < n; ++i) M(i, i) = -1;
  return M;
}

// Every exact point of level j lies on at least two pieces of level j - 1.
bool point_support(const Decomposition& d, std::size_t j, std::string& detail) {
  for (const auto& x : level_points(d.levels[j])) {
    DVector f(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) f[i] = x[i].to_double();
    std::size_t on = 0;
    for (const auto& p : d.levels[j - 1].pieces)
      if (p.distance(f) < 1e-9) ++on;
    if (on < 2) {
      detail = "point on " + std::to_string(on) + " pieces";
      return false;
    }
  }
  return true;
}

void suite_boundary(RunReport& r, const RunConfig& cfg) {
  for (const char* name : {"Z1", "Z2", "Z3"}) {
    const std::size_t levels = std::string(name) == "Z3" ? 2 : 3;
    Decomposition d = build_decomposition(boundary_lattice(name), levels);
    json m;
    for (std::size_t j = 1; j < d.levels.size(); ++j) m["level" + std::to_string(j)] = census(d.levels[j]).summary();
    auto nest = verify_nesting(d, 8, cfg.seed);
    r.check(std::string("nesting ") + name, nest.ok, json{{"worst", nest.worst_relative}}, "1e-9", nest.detail);
    auto sym = verify_symmetry(d, conjugation(d.lattice.dim()));
    r.check(std::string("iota symmetry ") + name, sym.ok, m, "exact", sym.detail);
    auto drop = verify_dimension_drop(d);
    r.check(std::string("dimension drop ") + name, drop.ok, json::object(), "exact", drop.detail);
    if (d.levels.size() > 2 && !d.levels[2].pieces.empty()) {
      std::string detail;
      bool ok = point_support(d, 2, detail);
      r.check(std::string("S_2 points lie on two S_1 pieces ") + name, ok, json::object(), "1e-9", detail);
    }
  }
}

void suite_normalizing(RunReport& r, const RunConfig& cfg) {
  const std::size_t samples = std::max<std::size_t>(4, std::min<std::size_t>(cfg.trials, 32));
  Order Zi = builtin_order("Zi");
  auto a = sphere_normalizing_audit(Inversion::standard(Algebra::C), Zi, samples, 2.0, cfg.seed);
  r.check("sphere-normalizing 1/x on Z[i]", a.pass, json{{"gammas", a.gammas_checked}}, "1e-9");
  for (const auto& name : {"Z", "Zi", "Zi_times_1pi", "Z3", "Hurwitz", "Lipschitz", "Cayley"}) {
    Order L = builtin_order(name);
    auto b = sphere_normalizing_audit(Inversion::conjugate(L.algebra()), L, std::min<std::size_t>(samples, 6), 2.0,
                                      cfg.seed);
    r.check(std::string("sphere-normalizing 1/conj(x) on ") + name, b.pass, json{{"gammas", b.gammas_checked}},
            "1e-9");
  }
  auto rot = catalog_algorithm("hurwitz-J-rotated");
  auto c = sphere_normalizing_audit(rot.inversion, *rot.order, samples, 2.0, cfg.seed);
  bool witness = false;
  json w = json::object();
  const double t = std::numbers::pi / 10;
  for (const auto& f : c.failures) {
    FloatElement s(Algebra::C, {std::cos(t), -std::sin(t)}), y(Algebra::C, {std::cos(11 * t), std::sin(11 * t)});
    if (norm(f.gamma - FloatElement(Algebra::C, {-2.0, 0.0})) < 1e-12 && norm(f.s - s) < 1e-9 &&
        norm(f.image - y) < 1e-9) {
      witness = true;
      w = json{{"gamma", serialize(f.gamma)}, {"s", serialize(f.s)}, {"iota_gamma_iota_s", serialize(f.image)},
               {"reason", f.reason}};
    }
  }
  r.check("sphere-normalizing fails for e^{i pi/10}/conj(x) on Z[i](1+i) with witness gamma = -2", !c.pass && witness,
          w, "1e-9");
}

void suite_finiteness(RunReport& r, const RunConfig&) {
  auto run = [&](const std::string& name, const std::string& expect, std::size_t points) {
    auto a = catalog_algorithm(name);
    auto rep = finiteness_audit(a.domain, *a.order, a.inversion);
    json pts = json::array();
    for (const auto& p : rep.points) pts.push_back(serialize(p));
    bool ok = rep.verdict() == expect && (expect != "FINITE" || rep.points.size() == points);
    r.check("finiteness " + name + " " + expect, ok,
            json{{"verdict", rep.verdict()}, {"points", pts}, {"arcs", rep.arcs.size()}, {"note", rep.note}});
  };
  run("hurwitz-J", "FINITE", 4);
  run("hurwitz-J-rotated", "FINITE", 4);
  run("hurwitz-shifted", "FINITE", 2);
  run("chevron", "NOT-FINITE", 0);
}

struct TrapConfig {
  FloatElement x, a;
  Inversion iota;
  std::string order;
};

std::vector<TrapConfig> trap_configs(std::size_t count, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> delta(1e-4, 1e-2), angle(-1e-3, 1e-3);
  std::vector<TrapConfig> out;
  const double s3 = std::sqrt(3.0) / 2;
  const std::vector<std::pair<double, double>> circle = {{0.5, s3},  {-0.5, s3},  {0.5, -s3},  {-0.5, -s3},
                                                        {s3, 0.5},  {-s3, 0.5},  {s3, -0.5},  {-s3, -0.5}};
  for (std::size_t k = 0; out.size() < count; ++k) {
    if (k % 5 == 0) {
      double a = k % 10 == 0 ? 1.0 : -1.0;
      out.push_back({FloatElement(Algebra::R, {a * (1 - delta(rng))}), FloatElement(Algebra::R, {a}),
                     Inversion::standard(Algebra::R), "Z"});
      continue;
    }
    auto [c, s] = circle[k % circle.size()];
    double rr = 1 - delta(rng), t = std::atan2(s, c) + angle(rng);
    out.push_back({FloatElement(Algebra::C, {rr * std::cos(t), rr * std::sin(t)}), FloatElement(Algebra::C, {c, s}),
                   Inversion::standard(Algebra::C), "Zi"});
  }
  return out;
}

void suite_trap(RunReport& r, const RunConfig& cfg) {
  Tally ident, incr;
  std::size_t steps = 0;
  for (const auto& c : trap_configs(std::max<std::size_t>(cfg.trials, 1), cfg.seed)) {
    Order L = builtin_order(c.order);
    auto rep = trap_expansion_check(c.x, c.a, c.iota, L, cfg.depth ? cfg.depth : default_trap_depth(L));
    steps += rep.steps;
    ident.add(rep.identity_ok && rep.steps > 0, serialize(c.x) + " -> " + rep.stop_reason, rep.worst_relative);
    incr.add(rep.strictly_increasing, serialize(c.x));
  }
  json m = ident.measured();
  m["total_steps"] = steps;
  r.check("trap distance identity", ident.failures == 0, m, "1e-8", ident.first);
  finish(r, "trap distances strictly increase", incr, "strict");
}

void suite_proximity(RunReport& r, const RunConfig& cfg) {
  const std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  auto A = SpherePiece::unit_sphere(2);
  auto table = [](const ProximityReport& p) {
    json rows = json::array();
    for (const auto& row : p.rows) rows.push_back(json{{"epsilon", row.epsilon}, {"tau", row.tau}, {"accepted", row.accepted}});
    return json{{"rows", rows}, {"linear_constant", p.linear_constant}, {"label", p.label}};
  };
  auto same = proximity_estimate(A, A, eps, 2000, cfg.seed);
  bool same_ok = true;
  for (const auto& row : same.rows) same_ok = same_ok && row.tau <= row.epsilon;
  r.check("proximity A = B gives tau <= eps", same_ok, table(same), "ESTIMATE");
  auto tr = proximity_estimate(A, A.translated({Rational(1), Rational(0)}), eps, 4000, cfg.seed);
  r.check("proximity transversal circles: linear bound", tr.linear && tr.tends_to_zero, table(tr), "ESTIMATE");
  auto tg = proximity_estimate(A, A.translated({Rational(2), Rational(0)}), eps, 4000, cfg.seed);
  r.check("proximity tangent circles: no linear bound", !tg.linear && tg.tends_to_zero, table(tg), "ESTIMATE");
}

using Suite = void (*)(RunReport&, const RunConfig&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s = {
      {"algebra", suite_algebra},
      {"inversion-identity", suite_inversion_identity},
      {"lemma22", suite_lemma22},
      {"lemma23", suite_lemma23},
      {"cor24", suite_cor24},
      {"lemma25", suite_lemma25},
      {"forward-backward", suite_forward_backward},
      {"dani", suite_dani},
      {"convergence", suite_convergence},
      {"theorem15", suite_theorem15},
      {"iwasawa", suite_iwasawa},
      {"boundary", suite_boundary},
      {"normalizing", suite_normalizing},
      {"finiteness", suite_finiteness},
      {"trap", suite_trap},
      {"proximity", suite_proximity},
  };
  return s;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> n;
  for (const auto& [k, v] : suites()) n.push_back(k);
  n.push_back("all");
  return n;
}

RunReport cmd_verify(const RunConfig& cfg) {
  RunReport r;
  bool found = false;
  for (const auto& [name, fn] : suites())
    if (cfg.suite == "all" || cfg.suite == name) {
      found = true;
      fn(r, cfg);
    }
  if (!found) throw ConfigError("unknown suite '" + cfg.suite + "'");
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
  r.lines.push_back("suite " + cfg.suite + ": " + std::to_string(r.checks.size() - failed) + "/" +
                    std::to_string(r.checks.size()) + " checks passed, seed " + std::to_string(cfg.seed) +
                    ", trials " + std::to_string(cfg.trials));
  r.lines.push_back(failed ? "FAIL" : "PASS");
  return r;
}

}  // namespace cfrac::cli
