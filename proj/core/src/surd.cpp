#include "cfrac/surd.hpp"

#include <cmath>
#include <numeric>

#include "cfrac/errors.hpp"

namespace cfrac {

std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n) {
  if (n == 0) return {0, 1};
  std::uint64_t s = 1, f = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) f *= p;
  }
  f *= n;
  return {s, f};
}

Surd::Surd(const Rational& q) {
  if (q != 0) terms_[1] = q;
}

Surd Surd::sqrt_of(std::uint64_t m, const Rational& coeff) {
  Surd r;
  auto [s, f] = squarefree_split(m);
  if (m != 0) r.add_term(f, coeff * Rational(static_cast<unsigned long>(s)));
  return r;
}

void Surd::add_term(std::uint64_t m, const Rational& q) {
  if (q == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, q);
    return;
  }
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Surd::rational_part() const { return coefficient(1); }

Rational Surd::coefficient(std::uint64_t radicand) const {
  auto it = terms_.find(radicand);
  return it == terms_.end() ? Rational(0) : it->second;
}

double Surd::to_double() const {
  long double acc = 0;
  for (const auto& [m, q] : terms_) acc += static_cast<long double>(q.get_d()) * std::sqrt(static_cast<long double>(m));
  return static_cast<double>(acc);
}

namespace {

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// sign(a + b*sqrt(m)) for rationals a, b and m > 1 squarefree.
int sign_one_radical(const Rational& a, const Rational& b, std::uint64_t m) {
  int sa = sign_of(a), sb = sign_of(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  Rational lhs = a * a, rhs = b * b * Rational(static_cast<unsigned long>(m));
  return lhs > rhs ? sa : sb;
}

}  // namespace

int Surd::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sign_of(terms_.begin()->second);
  if (terms_.size() == 2) {
    auto it = terms_.begin();
    auto [m1, q1] = *it++;
    auto [m2, q2] = *it;
    if (m1 == 1) return sign_one_radical(q1, q2, m2);
    // q1 sqrt(m1) + q2 sqrt(m2) = sqrt(m1) (q1 + q2 sqrt(m1 m2)/m1)
    auto [s, f] = squarefree_split(m1 * m2);
    Rational b = q2 * Rational(static_cast<unsigned long>(s)) / Rational(static_cast<unsigned long>(m1));
    return sign_one_radical(q1, b, f);
  }
  long double acc = 0, scale = 0;
  for (const auto& [m, q] : terms_) {
    long double t = static_cast<long double>(q.get_d()) * std::sqrt(static_cast<long double>(m));
    acc += t;
    scale += std::fabs(t);
  }
  if (std::fabs(acc) <= 1e-15L * scale) throw Error("surd sign undecided: " + to_string());
  return acc > 0 ? 1 : -1;
}

Surd Surd::operator-() const {
  Surd r = *this;
  for (auto& [m, q] : r.terms_) q = -q;
  return r;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Surd r;
  for (const auto& [m1, q1] : terms_) {
    for (const auto& [m2, q2] : o.terms_) {
      std::uint64_t g = std::gcd(m1, m2);
      std::uint64_t f = (m1 / g) * (m2 / g);
      r.add_term(f, q1 * q2 * Rational(static_cast<unsigned long>(g)));
    }
  }
  *this = std::move(r);
  return *this;
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, q] : terms_) {
    std::string t = cfrac::to_string(q);
    if (!out.empty() && q > 0) out += "+";
    out += t;
    if (m != 1) out += "*sqrt" + std::to_string(m);
  }
  return out;
}

Surd parse_surd(const std::string& text) {
  Surd out;
  std::size_t i = 0;
  if (text.empty()) throw ParseError("empty surd literal");
  while (i < text.size()) {
    std::size_t j = i + 1;
    while (j < text.size() && text[j] != '+' && text[j] != '-') {
      if ((text[j] == 'e' || text[j] == 'E') && j + 1 < text.size()) ++j;
      ++j;
    }
    std::string term = text.substr(i, j - i);
    std::string coeff = term;
    std::uint64_t radicand = 1;
    if (auto s = term.find("sqrt"); s != std::string::npos) {
      std::string digits = term.substr(s + 4);
      if (digits.empty()) throw ParseError("missing radicand in '" + text + "'");
      radicand = std::stoull(digits);
      coeff = term.substr(0, s);
      if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
      if (coeff.empty() || coeff == "+") coeff = "1";
      if (coeff == "-") coeff = "-1";
    }
    out += Surd::sqrt_of(radicand, parse_rational(coeff));
    i = j;
  }
  return out;
}

}  // namespace cfrac
