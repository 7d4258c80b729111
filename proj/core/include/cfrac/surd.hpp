#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cfrac/rational.hpp"

namespace cfrac {

// Finite sums q_1*sqrt(m_1) + ... with squarefree radicands m_i >= 1.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& q);  // NOLINT(google-explicit-constructor)
  Surd(long q) : Surd(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  static Surd sqrt_of(std::uint64_t m, const Rational& coeff = 1);

  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;
  Rational coefficient(std::uint64_t radicand) const;
  double to_double() const;

  // Exact when at most two radicands are present, otherwise decided in
  // long double and rejected when too close to zero.
  int sign() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }
  friend bool operator<(const Surd& a, const Surd& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Surd& a, const Surd& b) { return (a - b).sign() <= 0; }

  // "3/2", "1/2*sqrt3", "1/4+3/4*sqrt2-1/4*sqrt10".
  std::string to_string() const;

 private:
  void add_term(std::uint64_t m, const Rational& q);
  std::map<std::uint64_t, Rational> terms_;
};

// Squarefree factorisation n = s^2 * f; returns the pair (s, f).
std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n);

Surd parse_surd(const std::string& text);

inline double to_double(const Surd& s) { return s.to_double(); }

}  // namespace cfrac
