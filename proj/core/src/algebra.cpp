#include "cfrac/algebra.hpp"

namespace cfrac {

const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::R: return "R";
    case Algebra::C: return "C";
    case Algebra::H: return "H";
    case Algebra::O: return "O";
  }
  return "?";
}

Algebra parse_algebra(const std::string& name) {
  if (name == "R") return Algebra::R;
  if (name == "C") return Algebra::C;
  if (name == "H") return Algebra::H;
  if (name == "O") return Algebra::O;
  throw UnknownName("unknown algebra '" + name + "' (expected R, C, H or O)");
}

Algebra algebra_of_dimension(std::size_t d) {
  switch (d) {
    case 1: return Algebra::R;
    case 2: return Algebra::C;
    case 4: return Algebra::H;
    case 8: return Algebra::O;
    default: throw DimensionMismatch("no division algebra of dimension " + std::to_string(d));
  }
}

const char* backend_name(Backend b) { return b == Backend::Exact ? "exact" : "float"; }

Backend parse_backend(const std::string& name) {
  if (name == "exact") return Backend::Exact;
  if (name == "float") return Backend::Float;
  throw UnknownName("unknown backend '" + name + "' (expected exact or float)");
}

namespace {

using Table = std::array<std::array<BasisProduct, 8>, 8>;

// Signed basis elements of level n are represented as vectors of length 2^n
// with one nonzero entry; products follow (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)).
struct Signed {
  int index;
  int sign;
};

Signed mul_signed(Signed x, Signed y, int n);

Signed conj_signed(Signed x) { return {x.index, x.index == 0 ? x.sign : -x.sign}; }

Signed mul_signed(Signed x, Signed y, int n) {
  if (n == 0) return {0, x.sign * y.sign};
  const int half = 1 << (n - 1);
  const bool xb = x.index >= half, yb = y.index >= half;
  Signed xa{x.index % half, x.sign}, ya{y.index % half, y.sign};
  Signed r{};
  if (!xb && !yb) {  // (a,0)(c,0) = (ac, 0)
    r = mul_signed(xa, ya, n - 1);
  } else if (!xb && yb) {  // (a,0)(0,d) = (0, da)
    r = mul_signed(ya, xa, n - 1);
    r.index += half;
  } else if (xb && !yb) {  // (0,b)(c,0) = (0, b conj(c))
    r = mul_signed(xa, conj_signed(ya), n - 1);
    r.index += half;
  } else {  // (0,b)(0,d) = (-conj(d) b, 0)
    r = mul_signed(conj_signed(ya), xa, n - 1);
    r.sign = -r.sign;
  }
  return r;
}

Table build_table() {
  Table t{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Signed s = mul_signed({i, 1}, {j, 1}, 3);
      t[i][j] = {s.index, s.sign};
    }
  return t;
}

}  // namespace

const Table& basis_table() {
  static const Table table = build_table();
  return table;
}

FloatElement to_float(const ExactElement& x) {
  std::vector<double> c(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) c[i] = x[i].get_d();
  return FloatElement(x.algebra(), std::move(c));
}

FloatElement to_float(const SurdElement& x) {
  std::vector<double> c(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) c[i] = x[i].to_double();
  return FloatElement(x.algebra(), std::move(c));
}

ExactElement to_exact(const FloatElement& x) {
  std::vector<Rational> c(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) c[i] = rational_from_double(x[i]);
  return ExactElement(x.algebra(), std::move(c));
}

SurdElement to_surd(const ExactElement& x) {
  std::vector<Surd> c(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) c[i] = Surd(x[i]);
  return SurdElement(x.algebra(), std::move(c));
}

Algebra AlgebraElement::algebra() const {
  return std::visit([](const auto& e) { return e.algebra(); }, v_);
}

const ExactElement& AlgebraElement::exact() const {
  if (v_.index() != 0) throw BackendMismatch("expected an exact element, got a float element");
  return std::get<0>(v_);
}

const FloatElement& AlgebraElement::as_float() const {
  if (v_.index() != 1) throw BackendMismatch("expected a float element, got an exact element");
  return std::get<1>(v_);
}

FloatElement AlgebraElement::to_float() const {
  return v_.index() == 0 ? cfrac::to_float(std::get<0>(v_)) : std::get<1>(v_);
}

AlgebraElement AlgebraElement::with_backend(Backend b) const {
  if (b == backend()) return *this;
  if (b == Backend::Float) return AlgebraElement(to_float());
  return AlgebraElement(to_exact(std::get<1>(v_)));
}

namespace {

template <class F>
AlgebraElement binary(const AlgebraElement& x, const AlgebraElement& y, F f) {
  if (x.backend() != y.backend())
    throw BackendMismatch(std::string("backend mismatch: ") + backend_name(x.backend()) + " vs " +
                          backend_name(y.backend()));
  if (x.is_exact()) return AlgebraElement(f(x.exact(), y.exact()));
  return AlgebraElement(f(x.as_float(), y.as_float()));
}

}  // namespace

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return mul(a, b); });
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return a + b; });
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return a - b; });
}

AlgebraElement quotient(const AlgebraElement& p, const AlgebraElement& q) {
  return binary(p, q, [](const auto& a, const auto& b) { return quotient(a, b); });
}

AlgebraElement conj(const AlgebraElement& x) {
  return std::visit([](const auto& e) { return AlgebraElement(conj(e)); }, x.value());
}

AlgebraElement inv(const AlgebraElement& x) {
  return std::visit([](const auto& e) { return AlgebraElement(inv(e)); }, x.value());
}

std::variant<Rational, double> norm_sq(const AlgebraElement& x) {
  if (x.is_exact()) return norm_sq(x.exact());
  return norm_sq(x.as_float());
}

std::variant<Rational, double> re(const AlgebraElement& x) {
  if (x.is_exact()) return re(x.exact());
  return re(x.as_float());
}

}  // namespace cfrac
