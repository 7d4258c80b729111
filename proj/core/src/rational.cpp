#include "cfrac/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "cfrac/errors.hpp"

namespace cfrac {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw ParseError("cannot convert non-finite double to rational");
  Rational q(value);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed integer '" + std::string(s) + "'");
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
      throw ParseError("signed denominator in '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
  }
  // Decimal with optional fraction and exponent, converted exactly.
  std::string_view s = text;
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size())
      throw ParseError("malformed exponent in '" + std::string(text) + "'");
    s = s.substr(0, e);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  if (digits.empty()) digits = "0";
  Integer num(digits, 10);
  long shift = exponent - fraction_digits;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(num * scale) : make_rational(num, scale);
  if (negative) q = -q;
  return q;
}

std::string float_to_string(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  // Shortest representation that reads back to the same double.
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  std::string s(buf, ptr);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

}  // namespace cfrac
