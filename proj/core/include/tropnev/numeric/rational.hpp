#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropnev::numeric {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p/q", integers and decimals with an optional exponent ("-1.25e-3").
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Rounded to `digits` places after the point.
std::string to_decimal(const Rational& q, int digits);

int sign(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& q);
Rational pow2(long exponent);

// Smallest-denominator rational in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

Integer binomial(unsigned n, unsigned k);

}  // namespace tropnev::numeric
