#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cfrac {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den = 1);

// Exact binary value of a finite double.
Rational rational_from_double(double value);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Canonical text: "num" when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rational& q);

// Accepts "a", "a/b", and finite decimals such as "-0.125" or "3e-2"
// (converted exactly, so "0.1" is 1/10).
Rational parse_rational(std::string_view text);

// Round-trippable shortest-ish float text; always contains '.', 'e', "inf"
// or "nan" so it never reads back as an exact rational.
std::string float_to_string(double x);

}  // namespace cfrac
