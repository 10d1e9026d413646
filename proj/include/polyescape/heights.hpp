#pragma once

#include "polyescape/logscale.hpp"
#include "polyescape/polynomial.hpp"
#include "polyescape/rational.hpp"

#include <utility>

namespace polyescape {

// Bundled height data for an algebraic number of bounded degree: an integer
// bound on the naive height (largest |coefficient| of the minimal integer
// polynomial), a rational bound on the logarithmic height, and the degree.
struct HeightBound {
    Integer naive_height_bound;  // >= 1
    Rational log_height_bound;   // >= 0
    int degree_bound = 1;        // >= 1
};

// Largest absolute value over the coefficients. p must be nonzero.
Integer naive_height(const IntPolynomial& p);

// (1/(H+1), H+1): every nonzero algebraic number with naive height H has
// absolute value strictly inside this interval. H >= 1.
std::pair<Rational, Rational> liouville_bounds(const Integer& h);

// Logarithmic-height growth of m field operations starting from inputs of
// log height <= h_max: (m+1) h_max + m log 2 (upper-rounded log 2).
Rational arithmetic_height_bound(const Rational& h_max, unsigned long m);

// Coefficient bound for the characteristic polynomial of a d x d matrix with
// b-bit entries (entry magnitudes <= 2^b): (2 d 2^{2b})^{d/2}, plus the
// integer-cleared companion bound multiplied by 2^{bd}.
struct CharPolyCoeffBound {
    LogScaleRational bound;          // (2 d 2^{2b})^{d/2}
    LogScaleRational cleared_bound;  // bound * 2^{bd}
    Rational log_bound;              // (d/2) log(2 d 2^{2b}), upper-rounded
    bool small_dimension = false;    // d < 4: outside the cited range, flagged
};
CharPolyCoeffBound charpoly_coeff_bound(int d, int b);

// Logarithmic height of any eigenvalue of a d x d matrix of bit size b: 3 b d^2.
Rational eigenvalue_height_bound(int d, int b);

// Height profile of such an eigenvalue: the 3 b d^2 logarithmic bound plus a
// power-of-two integer bound on the naive height via log H <= n (h + log 2).
HeightBound eigenvalue_height_profile(int d, int b);

// Lower bound on the distance between distinct roots of p (degree n >= 2,
// naive height H): sqrt(6) / (n^{(n+1)/2} H^{n-1}), rounded toward zero
// (numerator down, denominator up) so it stays a valid lower bound.
Rational mignotte_separation(const IntPolynomial& p);

// Upper bound 4^{3 b d^3} on 1/|lambda| and 1/theta over the nonzero spectrum
// parts; exact power of two (4^{3bd^3} = 2^{6bd^3}) materialized as a value
// when representable, log-scale above 10^7 bits.
LogScaleRational inverse_eigenvalue_bound(int d, int b);

// The matching exact lower bound 4^{-(3 b d^3)} = 2^{-6 b d^3} on |lambda|
// and theta, used as the enclosure-independent fallback.
Rational inverse_eigenvalue_floor(int d, int b);

}  // namespace polyescape
