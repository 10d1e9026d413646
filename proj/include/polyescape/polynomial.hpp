#pragma once

#include "polyescape/linalg.hpp"
#include "polyescape/rational.hpp"

#include <utility>
#include <vector>

namespace polyescape {

// Dense rational-coefficient polynomial helpers (ascending degree, trimmed;
// an empty vector is the zero polynomial). These back the integer polynomial
// operations and the Sturm-sequence machinery.
namespace ratpoly {

using Poly = std::vector<Rational>;

int degree(const Poly& p);  // -1 for zero
void trim(Poly& p);
bool is_zero(const Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& s);
Rational eval(const Poly& p, const Rational& x);
Poly derivative(const Poly& p);
Poly monic(const Poly& p);  // p / leading; zero stays zero
// Euclidean division: returns quotient, stores remainder. den must be nonzero.
Poly divmod(const Poly& num, const Poly& den, Poly& rem);
// Exact division: throws std::logic_error when the remainder is nonzero.
Poly div_exact(const Poly& num, const Poly& den);
Poly gcd_monic(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0

}  // namespace ratpoly

// Integer-coefficient polynomial, ascending degree, no trailing zero
// coefficient; the empty coefficient list is the zero polynomial.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<Integer> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // coeff(i) is 0 beyond the degree.
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    const Integer& leading() const;
    const std::vector<Integer>& coefficients() const { return c_; }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const;  // -1, 0, +1

    IntPolynomial derivative() const;
    Integer content() const;           // gcd of |coefficients|; 0 for zero
    IntPolynomial primitive_part() const;  // content divided out, leading > 0

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    bool operator==(const IntPolynomial& other) const = default;

    ratpoly::Poly to_ratpoly() const;
    // Clears denominators and divides out the content; the result equals the
    // input up to a positive rational constant, leading coefficient > 0.
    static IntPolynomial from_ratpoly_cleared(const ratpoly::Poly& p);

    std::string to_pretty_string(const std::string& var = "x") const;

private:
    std::vector<Integer> c_;
};

// Exact matrix substitution p(A) by Horner's scheme.
RatMatrix eval(const IntPolynomial& p, const RatMatrix& a);

// An integer polynomial together with the positive rational scale that maps
// its monic rational form to the cleared integer form:
//   cleared = scale * monic,  scale = leading(cleared) as a rational.
struct ScaledPolynomial {
    IntPolynomial cleared;  // primitive, leading coefficient > 0
    Rational scale;
    ratpoly::Poly monic() const;
};

// Characteristic polynomial det(xI - A), computed by the Faddeev-LeVerrier
// recurrence, returned in cleared-integer form with its monic scale.
ScaledPolynomial char_poly(const RatMatrix& a);

// Minimal polynomial: least-degree monic annihilator, found by exact
// elimination on vectorized powers of A. The result is verified to
// annihilate A exactly before returning.
ScaledPolynomial min_poly(const RatMatrix& a);

// Yun squarefree decomposition: pairwise-coprime squarefree factors with
// multiplicities; the product of factor^multiplicity equals p up to a
// nonzero rational constant. Factors are primitive with positive leading
// coefficient, ordered by ascending multiplicity.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// Primitive positive-leading gcd.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// True when den divides num exactly (num = q * den over the rationals).
bool poly_divides(const IntPolynomial& den, const IntPolynomial& num);

}  // namespace polyescape
