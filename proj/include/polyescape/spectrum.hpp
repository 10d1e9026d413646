#pragma once

#include "polyescape/linalg.hpp"
#include "polyescape/polynomial.hpp"
#include "polyescape/rational.hpp"

#include <stdexcept>
#include <vector>

namespace polyescape {

// Raised when root enclosures cannot be certified even at the maximum
// working precision.
class CertificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Closed rational interval [lo, hi]; a point interval (lo == hi) represents
// an exactly-known rational value.
struct RationalInterval {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

enum class EigenvalueKind { Zero, PositiveReal, NegativeReal, ComplexPair };

// Certified enclosure of one eigenvalue; a ComplexPair holds the
// upper-half-plane representative eta + i*theta with theta > 0.
struct EigenvalueEnclosure {
    EigenvalueKind kind = EigenvalueKind::Zero;
    RationalInterval real_interval;  // encloses the eigenvalue (or eta)
    RationalInterval imag_interval;  // encloses theta; [0,0] for real kinds
    unsigned index = 1;              // multiplicity in the minimal polynomial
    unsigned alg_multiplicity = 1;   // multiplicity in the characteristic polynomial
};

struct Spectrum {
    std::vector<EigenvalueEnclosure> eigenvalues;  // pairwise disjoint, sorted
    std::size_t dimension = 0;
};

struct IsolatedRealRoot {
    RationalInterval interval;
    unsigned multiplicity = 1;
};

struct IsolatedComplexPair {
    RationalInterval real_interval;
    RationalInterval imag_interval;  // lo > 0 (upper-half representative)
    unsigned multiplicity = 1;
};

enum class SignClass { Negative, Zero, Positive, ZeroUncertified };

// Disjoint enclosures of the distinct real roots of p, one per root, with
// widths at most 2^-precision_bits. Rational roots come back as exact point
// intervals; non-point intervals exclude -1, 0 and 1, so signs and
// comparisons against those values are certified.
std::vector<IsolatedRealRoot> isolate_real_roots(const IntPolynomial& p,
                                                 unsigned precision_bits);

// Disjoint boxes around the distinct upper-half-plane roots of p (one per
// conjugate pair), widths at most 2^-precision_bits, imag lo > 0.
std::vector<IsolatedComplexPair> isolate_complex_roots(const IntPolynomial& p,
                                                       unsigned precision_bits);

// Certified spectral structure of a square matrix: classified enclosures,
// index = multiplicity in the minimal polynomial (largest Jordan block) and
// algebraic multiplicity from the characteristic polynomial.
Spectrum spectrum(const RatMatrix& a, unsigned precision_bits);

// Certified sign of the real part, decided from the enclosure alone.
SignClass real_part_sign(const EigenvalueEnclosure& e);

}  // namespace polyescape
