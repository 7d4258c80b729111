#include "cfrac/catalog.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "cfrac/errors.hpp"
#include "cfrac/iwasawa.hpp"
#include "cfrac/serialize.hpp"

namespace cfrac {

namespace {

std::shared_ptr<const Order> order_ptr(const std::string& name) {
  return std::make_shared<const Order>(builtin_order(name));
}

Surd half() { return Surd(make_rational(1, 2)); }

CFAlgorithm dirichlet_algorithm(const std::string& name, const std::string& order, const std::string& note) {
  auto L = order_ptr(order);
  return {name, L->algebra(), Inversion::standard(L->algebra()), L, Domain::dirichlet(L), note};
}

// Square K = {a(1+i) + b(1-i) : a, b in [-1/2, 1/2)}.
Domain j_hurwitz_square() {
  ExactElement f1(Algebra::C, {Rational(1), Rational(1)});
  ExactElement f2(Algebra::C, {Rational(1), Rational(-1)});
  return Domain::box(Algebra::C, {f1, f2}, {{-half(), half()}, {-half(), half()}});
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"regular", "division algebra", "R, 1/x, Z, K = [0,1)"},
      {"alpha(a)", "division algebra", "R, 1/x, Z, K = [a-1, a) for rational a in [0,1)"},
      {"hurwitz-A", "division algebra", "C, 1/x, Z[i], K = [-1/2,1/2)^2"},
      {"hurwitz-J", "division algebra", "C, 1/x, Z[i](1+i), K = {a(1+i)+b(1-i) : a,b in [-1/2,1/2)}"},
      {"hurwitz-J-rotated", "division algebra", "C, e^{i pi/10}/conj(x), Z[i](1+i), J. Hurwitz square (float only)"},
      {"hurwitz-shifted", "division algebra", "C, 1/x, Z[i], K = [sqrt3/2-1, sqrt3/2) x [-1/2,1/2)"},
      {"chevron", "division algebra", "C, 1/x, Z[i], b in [-1/2,1/2), |x| < 1, |x-1| >= 1"},
      {"r3-box", "division algebra", "R^3 = span{1,i,j} in H, x/|x|^2, Z^3, K = [-1/2,1/2)^3"},
      {"quat-hurwitz", "division algebra", "H, 1/x, Hurwitz integers, Dirichlet domain"},
      {"quat-gausenstein", "division algebra", "H, 1/x, Gausenstein integers, Dirichlet domain (float only)"},
      {"quat-third", "division algebra", "H, 1/x, third norm-Euclidean order, Dirichlet domain (float only)"},
      {"quat-lipschitz", "division algebra", "H, 1/x, Lipschitz integers, Dirichlet domain (radius 1)"},
      {"quat-hurwitz-1pi", "division algebra", "H, 1/x, Hurwitz integers times (1+i), Dirichlet domain"},
      {"oct-cayley", "division algebra", "O, 1/x, Cayley integers, Dirichlet domain"},
      {"oct-cayley-1pe1", "division algebra", "O, 1/x, Cayley integers times (1+e1), Dirichlet domain"},
      {"x1h", "iwasawa", "X^1_H, Koranyi inversion, Hurwitz x (Zi+Zj+Zk), K1 Dirichlet x [-1/2,1/2)^3"},
      {"x1c-heisenberg", "iwasawa", "Heisenberg X^1_C, Koranyi inversion, Z[i] x Zi, [-1/2,1/2)^2 x [-1/2,1/2)"},
      {"x3r", "iwasawa", "X^3_R, Koranyi inversion, Z^3, [-1/2,1/2)^3"},
  };
}

bool is_iwasawa_name(const std::string& name) {
  for (const auto& n : iwasawa_algorithm_names())
    if (n == name) return true;
  return false;
}

CFAlgorithm catalog_algorithm(const std::string& name) {
  using A = Algebra;
  if (name == "regular") {
    auto Z = order_ptr("Z");
    return {name, A::R, Inversion::standard(A::R), Z, Domain::unit_box(A::R, 1, Surd(0), Surd(1)), "regular CF"};
  }
  if (name.rfind("alpha(", 0) == 0 && name.back() == ')') {
    Rational a = parse_rational(name.substr(6, name.size() - 7));
    if (a < 0 || a >= 1) throw InvalidConfiguration("alpha must lie in [0, 1), got " + to_string(a));
    auto Z = order_ptr("Z");
    return {name, A::R, Inversion::standard(A::R), Z, Domain::unit_box(A::R, 1, Surd(a - 1), Surd(a)),
            "alpha-CF"};
  }
  if (name == "hurwitz-A") {
    auto G = order_ptr("Zi");
    return {name, A::C, Inversion::standard(A::C), G, Domain::unit_box(A::C, 2, -half(), half()),
            "A. Hurwitz complex CF"};
  }
  if (name == "hurwitz-J") {
    auto G = order_ptr("Zi_times_1pi");
    return {name, A::C, Inversion::standard(A::C), G, j_hurwitz_square(), "J. Hurwitz complex CF"};
  }
  if (name == "hurwitz-J-rotated") {
    auto G = order_ptr("Zi_times_1pi");
    const double t = std::numbers::pi / 10;
    FloatElement u(A::C, {std::cos(t), std::sin(t)});
    return {name, A::C, Inversion::rotated(u), G, j_hurwitz_square(),
            "J. Hurwitz square with the rotated inversion e^{i pi/10}/conj(x)"};
  }
  if (name == "hurwitz-shifted") {
    auto G = order_ptr("Zi");
    Surd r = Surd::sqrt_of(3, make_rational(1, 2));
    return {name, A::C, Inversion::standard(A::C), G,
            Domain::box(A::C, {ExactElement::basis(A::C, 0), ExactElement::basis(A::C, 1)},
                        {{r - Surd(1), r}, {-half(), half()}}),
            "A. Hurwitz square shifted right as far as possible"};
  }
  if (name == "chevron") {
    auto G = order_ptr("Zi");
    return {name, A::C, Inversion::standard(A::C), G, Domain::chevron(), "chevron-shaped domain"};
  }
  if (name == "r3-box") {
    auto Z3 = order_ptr("Z3");
    return {name, A::H, Inversion::conjugate(A::H), Z3, Domain::unit_box(A::H, 3, -half(), half()),
            "R^3 as span{1, i, j}; 1/conj(x) = x/|x|^2 preserves the span"};
  }
  if (name == "quat-hurwitz") return dirichlet_algorithm(name, "Hurwitz", "Hurwitz integers");
  if (name == "quat-gausenstein") return dirichlet_algorithm(name, "Gausenstein", "Gausenstein integers");
  if (name == "quat-third") return dirichlet_algorithm(name, "ThirdQuaternionic", "third norm-Euclidean order");
  if (name == "quat-lipschitz") return dirichlet_algorithm(name, "Lipschitz", "Lipschitz integers (improper)");
  if (name == "quat-hurwitz-1pi")
    return dirichlet_algorithm(name, "Hurwitz_times_1pi", "Hurwitz integers times (1+i) (improper)");
  if (name == "oct-cayley") return dirichlet_algorithm(name, "Cayley", "Cayley integers");
  if (name == "oct-cayley-1pe1")
    return dirichlet_algorithm(name, "Cayley_times_1pe1", "Cayley integers times (1+e1) (improper)");
  if (is_iwasawa_name(name))
    throw InvalidConfiguration("'" + name + "' is an Iwasawa algorithm; use iwasawa-expand");
  throw UnknownName("unknown algorithm '" + name + "'");
}

CFAlgorithm custom_algorithm(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ';');) {
    if (trim(item).empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in algorithm string: '" + item + "'");
    kv[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  for (const auto& [k, v] : kv)
    if (k != "algebra" && k != "inversion" && k != "order" && k != "domain" && k != "name")
      throw ParseError("unknown key '" + k + "' in algorithm string");
  if (!kv.count("order")) throw ParseError("algorithm string needs order=...");
  auto L = order_ptr(kv["order"]);
  Algebra a = kv.count("algebra") ? parse_algebra(kv["algebra"]) : L->algebra();
  if (a != L->algebra()) throw InvalidConfiguration("order " + L->name() + " is not in " + algebra_name(a));
  std::string inv = kv.count("inversion") ? kv["inversion"] : "standard";
  Inversion iota = Inversion::standard(a);
  if (inv == "conjugate")
    iota = Inversion::conjugate(a);
  else if (inv.rfind("rotated:", 0) == 0) {
    AlgebraElement u = parse_element(inv.substr(8), a, Backend::Float);
    iota = Inversion::rotated(u.to_float());
  } else if (inv != "standard")
    throw ParseError("inversion must be standard, conjugate or rotated:<unit>");
  std::string dom = kv.count("domain") ? kv["domain"] : "dirichlet";
  Domain K = Domain::dirichlet(L);
  if (dom == "chevron") {
    if (a != Algebra::C) throw InvalidConfiguration("the chevron domain lives in C");
    K = Domain::chevron();
  } else if (dom.rfind("box:", 0) == 0) {
    auto colon = dom.find(':', 4);
    if (colon == std::string::npos) throw ParseError("box domain must be box:lo:hi");
    Surd lo = parse_surd(dom.substr(4, colon - 4)), hi = parse_surd(dom.substr(colon + 1));
    if (!L->is_rational()) throw InvalidConfiguration("box domains need a rational order");
    std::vector<ExactElement> frame;
    std::vector<Interval> bounds;
    for (std::size_t j = 0; j < L->rank(); ++j) {
      frame.push_back(L->exact_point([&] {
        Coords c(L->rank(), 0);
        c[j] = 1;
        return c;
      }()));
      bounds.push_back({lo, hi});
    }
    K = Domain::box(a, frame, bounds);
  } else if (dom != "dirichlet")
    throw ParseError("domain must be dirichlet, chevron or box:lo:hi");
  CFAlgorithm algo{kv.count("name") ? kv["name"] : "custom", a, iota, L, K, "custom: " + text};
  validate(algo);
  return algo;
}

CFAlgorithm resolve_algorithm(const std::string& name_or_inline) {
  if (name_or_inline.find('=') != std::string::npos) return custom_algorithm(name_or_inline);
  return catalog_algorithm(name_or_inline);
}

std::string order_catalog_text() {
  std::ostringstream os;
  for (const auto& n : builtin_order_names()) {
    Order L = builtin_order(n);
    os << "name: " << L.name() << "\n"
       << "algebra: " << algebra_name(L.algebra()) << "\n"
       << "dimension: " << L.dim() << "\n"
       << "rank: " << L.rank() << "\n"
       << "ring: " << (L.is_ring() ? "yes" : "no") << "\n"
       << "conjugation_closed: " << (L.conjugation_closed() ? "yes" : "no") << "\n"
       << "basis:\n";
    for (const auto& g : L.generators()) os << "  " << serialize(g) << "\n";
    os << "\n";
  }
  return os.str();
}

}  // namespace cfrac
