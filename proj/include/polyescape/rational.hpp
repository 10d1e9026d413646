#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyescape {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Thrown when textual input cannot be parsed into a rational number.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Number of bits in the binary expansion of |n|; bit_size(0) == 1.
std::size_t bit_size(const Integer& n);

// bit_size(numerator) + bit_size(denominator) of the canonical form.
std::size_t bit_size(const Rational& q);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

// Accepts "p", "-p", "p/q", and decimal literals like "-1.25" or "3.".
// Whitespace at either end is ignored. Throws ParseError on anything else
// (including a zero denominator).
Rational parse_rational(std::string_view text);

// Canonical exact form "p/q" (or "p" when q == 1); round-trips via parse_rational.
std::string to_string(const Rational& q);

// Decimal rendering with the given number of significant digits, suitable
// for human-facing report fields. Exact when the value is exactly
// representable, otherwise correctly rounded to nearest.
std::string to_decimal_string(const Rational& q, int significant_digits = 12);

// q == m / 2^k for integers m, k >= 0 (i.e. the denominator is a power of two).
bool is_dyadic(const Rational& q);

// floor/ceil to Integer, exact.
Integer floor_int(const Rational& q);
Integer ceil_int(const Rational& q);

Rational abs(const Rational& q);

// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

// q^e for integer e >= 0, exact.
Rational pow_rational(const Rational& q, unsigned long e);

// Exact integer square root check: returns true and sets root when n is a
// perfect square (n >= 0).
bool perfect_square(const Integer& n, Integer& root);

}  // namespace polyescape
