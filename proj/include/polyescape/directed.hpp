#pragma once

#include "polyescape/rational.hpp"

namespace polyescape {

// Directed rational enclosures of the transcendental quantities entering the
// bound formulas. Every function returns an exact rational that brackets the
// true value from the stated side; internal computations run at 192 bits of
// MPFR precision with directed rounding, far beyond the promised 64
// fractional bits of tightness.

// Natural logarithm of a positive rational.
Rational log_upper(const Rational& x);
Rational log_lower(const Rational& x);

// Exponential of a rational (throws std::overflow_error far beyond any
// simulable magnitude).
Rational exp_upper(const Rational& x);
Rational exp_lower(const Rational& x);

// Fundamental constants.
const Rational& log2_upper();
const Rational& log2_lower();
const Rational& pi_upper();
const Rational& pi_lower();
const Rational& sqrt6_lower();
const Rational& e_upper();

// Square root of a nonnegative rational. Exact when the value is a rational
// square; directed otherwise.
Rational sqrt_upper(const Rational& x);
Rational sqrt_lower(const Rational& x);

// Principal argument of the point (re, im) with im > 0: a directed enclosure
// of atan2(im, re) in (0, pi).
Rational arg_upper(const Rational& re, const Rational& im);
Rational arg_lower(const Rational& re, const Rational& im);

// n-th root upper bound of a positive rational (n >= 1).
Rational root_upper(const Rational& x, unsigned long n);

}  // namespace polyescape
