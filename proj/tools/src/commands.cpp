#include <map>
#include <random>
#include <sstream>

#include "cfrac/boundary.hpp"
#include "cfrac/catalog.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/iwasawa.hpp"
#include "cfrac/serialize.hpp"
#include "cfrac/svg.hpp"
#include "cfrac_cli/app.hpp"

namespace cfrac::cli {

std::string canonical_algorithm_name(const std::string& name) {
  static const std::map<std::string, std::string> alias = {
      {"lipschitz", "quat-lipschitz"},     {"hurwitz", "quat-hurwitz"},
      {"gausenstein", "quat-gausenstein"}, {"third", "quat-third"},
      {"cayley", "oct-cayley"},            {"cayley-1pe1", "oct-cayley-1pe1"},
      {"heisenberg", "x1c-heisenberg"},    {"x1c", "x1c-heisenberg"},
      {"X1H", "x1h"},                      {"X1C", "x1c-heisenberg"},
      {"X3R", "x3r"},                      {"XnR", "x3r"},
  };
  auto it = alias.find(name);
  return it == alias.end() ? name : it->second;
}

namespace {

bool literal_is_float(const std::string& s) { return s.find('.') != std::string::npos; }

Backend pick_backend(const RunConfig& cfg, bool exact_capable, const std::string& literal) {
  if (cfg.backend == "exact") {
    if (!exact_capable) throw ConfigError("this algorithm needs the float backend");
    return Backend::Exact;
  }
  if (cfg.backend == "float") return Backend::Float;
  return exact_capable && !literal_is_float(literal) ? Backend::Exact : Backend::Float;
}

json element_list(const std::vector<Surd>& p) {
  json a = json::array();
  for (const auto& c : p) a.push_back(c.to_string());
  return a;
}

template <class T>
std::string ser(const Element<T>& x) {
  return serialize(x);
}

template <class T>
void expansion_records(RunReport& r, const CFAlgorithm& algo, const Expansion<T>& exp,
                       const std::optional<Element<T>>& a0) {
  const Algebra a = algo.algebra;
  const bool standard = algo.inversion.kind() == InversionKind::Standard;
  std::vector<Convergent<T>> conv;
  if (standard) conv = convergents(exp.digits, a);
  json head;
  head["step"] = 0;
  head["digit"] = a0 ? json(ser(*a0)) : json(nullptr);
  head["iterate"] = ser(exp.x0);
  head["norm"] = exp.norms.empty() ? norm(exp.x0) : exp.norms[0];
  r.records.push_back(head);
  double err = 0, bound = 0;
  for (std::size_t n = 1; n <= exp.depth(); ++n) {
    json rec;
    rec["step"] = n;
    rec["digit"] = ser(exp.digits[n - 1]);
    rec["iterate"] = ser(exp.iterates[n]);
    rec["norm"] = exp.norms[n];
    if (standard) {
      rec["P"] = ser(conv[n].P);
      rec["Q"] = ser(conv[n].Q);
      auto e = verify_error_formula(exp, n, a);
      err = e.lhs, bound = e.rhs;
    } else {
      auto e = verify_error_route(exp, n, algo);
      err = e.lhs, bound = e.rhs;
    }
    rec["error"] = err;
    rec["bound"] = bound;
    r.records.push_back(rec);
  }
  std::ostringstream os;
  os << "depth " << exp.depth() << ", termination " << termination_name(exp.termination);
  r.lines.push_back(os.str());
  if (exp.depth() > 0) {
    r.lines.push_back("final error " + float_to_string(err));
    r.lines.push_back("error bound prod|x_i|/|Q_n| " + float_to_string(bound));
  }
  r.check("dani ledger |x_i| < 1", verify_dani_hypothesis(exp),
          json{{"max_norm", exp.norms.empty() ? 0.0 : *std::max_element(exp.norms.begin(), exp.norms.end())}});
}

template <class T>
RunReport run_expand(const RunConfig& cfg, const CFAlgorithm& algo, Element<T> x0, std::size_t depth) {
  RunReport r;
  r.lines.push_back("algorithm " + algo.name + ": " + algo.note);
  r.lines.push_back(std::string("backend ") + (std::is_same_v<T, Rational> ? "exact" : "float"));
  std::optional<Element<T>> a0;
  if (!algo.domain.contains(x0)) {
    auto p = reduce_into(*algo.order, algo.domain, x0, 0);
    a0 = p.value;
    r.lines.push_back("x0 = " + ser(x0) + " is not in K; expanding x0 - a0 with a0 = " + ser(p.value));
    x0 = x0 - p.value;
  }
  (void)cfg;
  auto exp = expand(x0, depth, algo);
  expansion_records(r, algo, exp, a0);
  return r;
}

IwasawaSpace space_of(const RunConfig& cfg, std::string& name) {
  name = canonical_algorithm_name(!cfg.space.empty() ? cfg.space : cfg.algo.empty() ? "x1h" : cfg.algo);
  if (!is_iwasawa_name(name)) throw ConfigError("unknown Iwasawa space '" + name + "' (X1H, X1C, X3R)");
  return iwasawa_algorithm(name).space;
}

template <class T>
json triple_json(const NullTriple<T>& t) {
  json R = json::array();
  for (const auto& x : t.R) R.push_back(ser(x));
  return json{{"Q", ser(t.Q)}, {"R", R}, {"P", ser(t.P)}};
}

template <class T>
RunReport run_iwasawa(const IwasawaAlgorithm& algo, const IwasawaPoint<T>& x0, std::size_t depth) {
  RunReport r;
  const IwasawaSpace& X = algo.space;
  r.lines.push_back("algorithm " + algo.name + " on " + X.describe() + ": " + algo.note);
  if (!in_domain(algo, x0)) throw ConfigError("x0 is not in K = K1 x K2");
  auto exp = iwasawa_expand(x0, algo, depth);
  auto triples = qrp_convergents(X, exp.digits);
  json head{{"step", 0}, {"iterate", serialize(X, exp.x0)}, {"gauge", exp.gauges.empty() ? 0.0 : exp.gauges[0]}};
  r.records.push_back(head);
  double err = 0, bound = 0;
  for (std::size_t n = 1; n <= exp.depth(); ++n) {
    auto e = verify_iwasawa_error(exp, n, X);
    err = e.lhs, bound = e.rhs;
    json rec{{"step", n},
             {"digit", serialize(X, exp.digits[n - 1].as_point())},
             {"iterate", serialize(X, exp.iterates[n])},
             {"gauge", exp.gauges[n]}};
    rec["triple"] = triple_json(triples[n]);
    rec["error"] = err;
    rec["bound"] = bound;
    r.records.push_back(rec);
  }
  r.lines.push_back("depth " + std::to_string(exp.depth()) + ", termination " + termination_name(exp.termination));
  if (exp.depth() > 0) {
    r.lines.push_back("final distance " + float_to_string(err));
    r.lines.push_back("bound prod gauge(x_i)/|Q_n|^{1/2} " + float_to_string(bound));
  }
  bool dani = true;
  for (bool b : exp.dani) dani = dani && b;
  r.check("dani ledger gauge(x_i) < 1", dani);
  auto nt = verify_null_triples(X, exp.digits);
  r.check("null triples", nt.ok, json::object(), std::is_same_v<T, Rational> ? "exact" : "1e-9", nt.detail);
  if constexpr (std::is_same_v<T, Rational>) r.check("integrality of Q_n, P_n", verify_integrality(algo, exp));
  return r;
}

std::string piece_kind(const SpherePiece& p) {
  if (p.kind() == PieceKind::Point) return "point";
  int d = p.dimension();
  return d == 0 ? "0-sphere" : d == 1 ? "circle" : std::to_string(d) + "-sphere";
}

json rational_list(const QVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

}  // namespace

RunReport cmd_expand(const RunConfig& cfg) {
  if (cfg.algo.empty()) throw ConfigError("expand needs --algo");
  const std::string name = canonical_algorithm_name(cfg.algo);
  if (is_iwasawa_name(name)) return cmd_iwasawa_expand(cfg);
  CFAlgorithm algo = resolve_algorithm(name);
  Backend b = pick_backend(cfg, algo.exact_capable(), cfg.x0);
  std::mt19937_64 rng(cfg.seed);
  if (b == Backend::Exact) {
    ExactElement x0 = cfg.x0.empty() ? algo.domain.sample_exact(rng) : parse_element(cfg.x0, algo.algebra, b).exact();
    return run_expand(cfg, algo, x0, cfg.depth ? cfg.depth : kDefaultExactDepth);
  }
  FloatElement x0 = cfg.x0.empty() ? algo.domain.sample(rng) : parse_element(cfg.x0, algo.algebra, b).to_float();
  return run_expand(cfg, algo, x0, cfg.depth ? cfg.depth : 40);
}

RunReport cmd_iwasawa_expand(const RunConfig& cfg) {
  std::string name;
  IwasawaSpace X = space_of(cfg, name);
  IwasawaAlgorithm algo = iwasawa_algorithm(name);
  Backend b = pick_backend(cfg, algo.exact_capable(), cfg.x0);
  const std::size_t depth = cfg.depth ? cfg.depth : 15;
  std::mt19937_64 rng(cfg.seed);
  if (b == Backend::Exact) {
    ExactIwasawaPoint x0 = cfg.x0.empty() ? sample_point_exact(algo, rng)
                                          : std::get<ExactIwasawaPoint>(parse_iwasawa_point(cfg.x0, X, b));
    return run_iwasawa(algo, x0, depth);
  }
  FloatIwasawaPoint x0 =
      cfg.x0.empty() ? sample_point(algo, rng) : std::get<FloatIwasawaPoint>(parse_iwasawa_point(cfg.x0, X, b));
  return run_iwasawa(algo, x0, depth);
}

RunReport cmd_boundary(const RunConfig& cfg) {
  BoundaryLattice L = boundary_lattice(cfg.lattice);
  if (cfg.levels == 0) throw ConfigError("--levels must be at least 1");
  Decomposition d = build_decomposition(L, cfg.levels);
  RunReport r;
  r.lines.push_back("lattice " + L.name + ", levels " + std::to_string(cfg.levels));
  for (std::size_t j = 1; j <= cfg.levels; ++j) {
    if (j >= d.levels.size() || d.levels[j].pieces.empty()) {
      r.lines.push_back("level" + std::to_string(j) + ": empty");
      break;
    }
    r.lines.push_back("level" + std::to_string(j) + ": " + census(d.levels[j]).summary());
  }
  for (std::size_t j = 0; j < d.levels.size(); ++j) {
    const Level& lv = d.levels[j];
    for (std::size_t k = 0; k < lv.pieces.size(); ++k) {
      const SpherePiece& p = lv.pieces[k];
      json rec{{"level", j}, {"index", k}, {"kind", piece_kind(p)}, {"center", rational_list(p.center())},
               {"radius_sq", to_string(p.radius_sq())}};
      json hull = json::array();
      for (std::size_t i = 0; p.kind() == PieceKind::Sphere && i < p.hull().rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < p.hull().cols(); ++c) row.push_back(to_string(p.hull()(i, c)));
        hull.push_back(row);
      }
      rec["hull"] = hull;
      json pts = json::array(), fpts = json::array();
      for (const auto& x : p.exact_points()) {
        pts.push_back(element_list(x));
        json f = json::array();
        for (const auto& c : x) f.push_back(c.to_double());
        fpts.push_back(f);
      }
      if (!pts.empty()) {
        rec["points"] = pts;
        rec["points_float"] = fpts;
      }
      if (j > 0) {
        const auto& pr = lv.provenance[k];
        rec["parent"] = pr.parent;
        rec["other"] = pr.other;
        rec["gamma"] = rational_list(pr.gamma);
        rec["multiplicity"] = pr.multiplicity;
      }
      r.records.push_back(rec);
    }
  }
  auto nest = verify_nesting(d, 8, cfg.seed);
  r.check("nesting S_{j+1} within S_j", nest.ok, json{{"worst", nest.worst_relative}}, "1e-9", nest.detail);
  QMatrix M = QMatrix::identity(L.dim());
  for (std::size_t i = 1; i < L.dim(); ++i) M(i, i) = -1;
  auto sym = verify_symmetry(d, M);
  r.check("levels invariant under iota = 1/x on S", sym.ok, json::object(), "exact", sym.detail);
  auto drop = verify_dimension_drop(d);
  r.check("dimension drop", drop.ok, json::object(), "exact", drop.detail);
  r.svg = decomposition_svg(d, cfg.levels);
  return r;
}

RunReport cmd_catalog(const RunConfig& cfg) {
  RunReport r;
  if (!cfg.algo.empty()) {
    const std::string name = canonical_algorithm_name(cfg.algo);
    if (is_iwasawa_name(name)) {
      auto a = iwasawa_algorithm(name);
      r.lines.push_back(a.name + ": " + a.space.describe() + ", " + a.note);
      r.lines.push_back("horizontal domain " + a.horizontal_domain.describe());
      r.lines.push_back("gauge radius of K " + float_to_string(a.gauge_radius()));
    } else {
      auto a = resolve_algorithm(name);
      r.lines.push_back(a.name + ": " + a.note);
      r.lines.push_back(std::string("algebra ") + algebra_name(a.algebra) + ", inversion " + a.inversion.describe() +
                        ", order " + a.order->name());
      r.lines.push_back("domain " + a.domain.describe() + ", sup|x| on K " + float_to_string(a.domain.sup_norm()));
      r.lines.push_back(std::string(a.proper() ? "proper" : "improper") +
                        (a.exact_capable() ? ", exact backend available" : ", float backend only"));
    }
    return r;
  }
  for (const auto& e : catalog_entries()) {
    r.records.push_back(json{{"name", e.name}, {"space", e.space}, {"summary", e.summary}});
    r.lines.push_back(e.name + "  [" + e.space + "]  " + e.summary);
  }
  for (const auto& n : builtin_order_names()) {
    Order L = builtin_order(n);
    json gens = json::array();
    for (const auto& g : L.generators()) gens.push_back(serialize(g));
    r.records.push_back(json{{"order", L.name()},
                             {"algebra", algebra_name(L.algebra())},
                             {"rank", L.rank()},
                             {"ring", L.is_ring()},
                             {"conjugation_closed", L.conjugation_closed()},
                             {"basis", gens}});
  }
  return r;
}

RunReport cmd_render(const RunConfig& cfg) {
  RunReport r;
  if (!cfg.algo.empty()) {
    CFAlgorithm a = resolve_algorithm(canonical_algorithm_name(cfg.algo));
    r.svg = domain_svg(a, cfg.grid);
    r.lines.push_back("domain figure for " + a.name);
  } else {
    Decomposition d = build_decomposition(boundary_lattice(cfg.lattice), cfg.levels);
    r.svg = decomposition_svg(d, cfg.levels);
    r.lines.push_back("decomposition figure for " + d.lattice.name);
  }
  return r;
}

}  // namespace cfrac::cli
