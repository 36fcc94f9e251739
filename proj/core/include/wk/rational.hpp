#pragma once

#include <gmpxx.h>

#include <string>

namespace wk {

using Integer = mpz_class;

// Exact rational, kept in lowest terms with positive denominator. All
// arithmetic in this project goes through this type; no floating point.
using Rational = mpq_class;

// Builds num/den in canonical form. Throws std::domain_error on zero
// denominator.
Rational make_rational(Integer numerator, Integer denominator);

Integer numerator_of(const Rational& r);
Integer denominator_of(const Rational& r);

// Always "num/den", e.g. "29/5760", "1/1".
std::string rational_str(const Rational& r);

// Strict inverse of rational_str: optional leading '-', decimal digits,
// exactly one '/', reduced, positive denominator. Throws
// std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer pow_integer(unsigned long base, unsigned long exp);

// k!! for odd k >= -1, with (-1)!! = 1. Cached per thread; the DVV
// coefficients hit this constantly.
const Integer& odd_double_factorial(long k);

}  // namespace wk
