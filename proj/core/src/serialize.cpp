#include "cfrac/serialize.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "cfrac/errors.hpp"

namespace cfrac {

namespace {

bool looks_float(std::string_view tok) {
  if (tok.find('/') != std::string_view::npos) return false;
  return tok.find_first_of(".eE") != std::string_view::npos || tok.find("inf") != std::string_view::npos ||
         tok.find("nan") != std::string_view::npos;
}

double parse_double(std::string_view tok) {
  std::string s(tok);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) throw ParseError("malformed float '" + s + "'");
  return v;
}

template <class T, class F>
std::string serialize_with(const Element<T>& x, F f) {
  std::string out = algebra_name(x.algebra());
  out += ':';
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (i) out += ',';
    out += f(x[i]);
  }
  return out;
}

const char* unit_name(Algebra a, std::size_t i) {
  static const char* quat[] = {"", "i", "j", "k"};
  static const char* oct[] = {"", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  if (a == Algebra::O) return oct[i];
  return quat[i];
}

template <class T, class F>
std::string pretty_with(const Element<T>& x, F text_of, bool exact) {
  std::string out;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (ScalarTraits<T>::is_zero(x[i])) continue;
    std::string c = text_of(x[i]);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (i == 0) {
      out += c;
    } else {
      if (!(exact && c == "1")) out += c;
      out += unit_name(x.algebra(), i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string serialize(const ExactElement& x) {
  return serialize_with(x, [](const Rational& q) { return to_string(q); });
}

std::string serialize(const FloatElement& x) {
  return serialize_with(x, [](double v) { return float_to_string(v); });
}

std::string serialize(const SurdElement& x) {
  return serialize_with(x, [](const Surd& s) { return s.to_string(); });
}

std::string serialize(const AlgebraElement& x) {
  return std::visit([](const auto& e) { return serialize(e); }, x.value());
}

AlgebraElement deserialize(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("missing ':' in element '" + std::string(text) + "'");
  Algebra a = parse_algebra(std::string(text.substr(0, colon)));
  std::vector<std::string_view> toks;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    toks.push_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (toks.size() != dimension(a))
    throw ParseError("expected " + std::to_string(dimension(a)) + " coefficients in '" + std::string(text) + "'");
  bool any_float = false;
  for (auto t : toks) any_float = any_float || looks_float(t);
  if (any_float) {
    std::vector<double> c;
    for (auto t : toks) c.push_back(looks_float(t) ? parse_double(t) : parse_rational(t).get_d());
    return AlgebraElement(FloatElement(a, std::move(c)));
  }
  std::vector<Rational> c;
  for (auto t : toks) c.push_back(parse_rational(t));
  return AlgebraElement(ExactElement(a, std::move(c)));
}

std::string pretty(const ExactElement& x) {
  return pretty_with(x, [](const Rational& q) { return to_string(q); }, true);
}

std::string pretty(const FloatElement& x) {
  return pretty_with(x, [](double v) { return float_to_string(v); }, false);
}

std::string pretty(const AlgebraElement& x) {
  return std::visit([](const auto& e) { return pretty(e); }, x.value());
}

namespace {

struct Term {
  std::string coeff;  // may be empty (implicit 1)
  bool negative = false;
  std::size_t unit = 0;
  Algebra unit_algebra = Algebra::R;
};

// Splits "a+bi-cj" into signed terms, keeping exponent signs attached.
std::vector<Term> split_terms(std::string_view s) {
  std::vector<Term> out;
  std::size_t i = 0;
  while (i < s.size()) {
    Term t;
    if (s[i] == '+' || s[i] == '-') {
      t.negative = s[i] == '-';
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') {
      if ((s[j] == 'e' || s[j] == 'E') && j > i && j + 1 < s.size() && (s[j + 1] == '+' || s[j + 1] == '-') &&
          std::isdigit(static_cast<unsigned char>(s[j - 1])))
        ++j;  // exponent sign
      ++j;
    }
    std::string body(s.substr(i, j - i));
    if (body.empty()) throw ParseError("empty term in '" + std::string(s) + "'");
    // Octonion units e1..e7 at the end.
    if (body.size() >= 2 && body[body.size() - 2] == 'e' && body.back() >= '1' && body.back() <= '7' &&
        (body.size() == 2 || !std::isdigit(static_cast<unsigned char>(body[body.size() - 3])) ||
         body[body.size() - 3] == '*')) {
      t.unit = static_cast<std::size_t>(body.back() - '0');
      t.unit_algebra = Algebra::O;
      body.resize(body.size() - 2);
    } else if (body.back() == 'i' || body.back() == 'j' || body.back() == 'k') {
      char u = body.back();
      t.unit = u == 'i' ? 1 : (u == 'j' ? 2 : 3);
      t.unit_algebra = u == 'i' ? Algebra::C : Algebra::H;
      body.pop_back();
    }
    if (!body.empty() && body.back() == '*') body.pop_back();
    t.coeff = body;
    out.push_back(t);
    i = j;
  }
  return out;
}

int rank(Algebra a) { return static_cast<int>(a); }

}  // namespace

AlgebraElement parse_element(std::string_view text, Algebra hint, Backend backend) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty element literal");
  if (s.size() > 2 && s[1] == ':' && std::isupper(static_cast<unsigned char>(s[0]))) {
    AlgebraElement e = deserialize(s);
    if (e.algebra() != hint && rank(e.algebra()) > rank(hint))
      throw AlgebraMismatch(std::string("element of ") + algebra_name(e.algebra()) + " given where " +
                            algebra_name(hint) + " expected");
    if (e.algebra() != hint) {
      // Embed a subalgebra element by zero padding.
      if (e.is_exact()) {
        std::vector<Rational> c(dimension(hint), Rational(0));
        for (std::size_t i = 0; i < e.exact().dim(); ++i) c[i] = e.exact()[i];
        e = AlgebraElement(ExactElement(hint, std::move(c)));
      } else {
        std::vector<double> c(dimension(hint), 0.0);
        for (std::size_t i = 0; i < e.as_float().dim(); ++i) c[i] = e.as_float()[i];
        e = AlgebraElement(FloatElement(hint, std::move(c)));
      }
    }
    return e.with_backend(backend);
  }
  auto terms = split_terms(s);
  Algebra a = hint;
  for (const auto& t : terms) {
    if (t.unit == 0) continue;
    if (rank(t.unit_algebra) > rank(a)) {
      // 'j' or 'k' in O is not accepted; octonion units must be e1..e7.
      throw ParseError("unit not available in " + std::string(algebra_name(a)) + ": '" + std::string(text) + "'");
    }
    if (a == Algebra::O && t.unit_algebra != Algebra::O && t.unit > 1)
      throw ParseError("use e1..e7 for octonion units: '" + std::string(text) + "'");
  }
  bool any_float = backend == Backend::Float;
  for (const auto& t : terms) any_float = any_float || looks_float(t.coeff);
  if (any_float) {
    std::vector<double> c(dimension(a), 0.0);
    for (const auto& t : terms) {
      double v = t.coeff.empty() ? 1.0 : (looks_float(t.coeff) ? parse_double(t.coeff) : parse_rational(t.coeff).get_d());
      c[t.unit] += t.negative ? -v : v;
    }
    return AlgebraElement(FloatElement(a, std::move(c)));
  }
  std::vector<Rational> c(dimension(a), Rational(0));
  for (const auto& t : terms) {
    Rational v = t.coeff.empty() ? Rational(1) : parse_rational(t.coeff);
    c[t.unit] += t.negative ? Rational(-v) : v;
  }
  return AlgebraElement(ExactElement(a, std::move(c)));
}

}  // namespace cfrac
