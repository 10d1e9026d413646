#include "polyescape/heights.hpp"

#include "polyescape/directed.hpp"

#include <gmp.h>

#include <stdexcept>

namespace polyescape {

namespace {

Integer int_pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.backend().data(), base.backend().data(), e);
    return out;
}

void require_positive(int d, int b) {
    if (d < 1 || b < 1) throw std::invalid_argument("dimension and bit size must be >= 1");
}

}  // namespace

Integer naive_height(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("naive height of the zero polynomial");
    Integer best = 0;
    for (const auto& c : p.coefficients()) {
        Integer a = c < 0 ? Integer(-c) : c;
        if (a > best) best = a;
    }
    return best;
}

std::pair<Rational, Rational> liouville_bounds(const Integer& h) {
    if (h < 1) throw std::invalid_argument("naive height must be >= 1");
    return {Rational(Integer(1), h + 1), Rational(h + 1)};
}

Rational arithmetic_height_bound(const Rational& h_max, unsigned long m) {
    if (h_max < 0) throw std::invalid_argument("log height bound must be nonnegative");
    return Rational(Integer(m + 1)) * h_max + Rational(Integer(m)) * log2_upper();
}

CharPolyCoeffBound charpoly_coeff_bound(int d, int b) {
    require_positive(d, b);
    CharPolyCoeffBound out;
    out.small_dimension = d < 4;

    // base = 2 d 2^{2b}; bound = base^{d/2} = sqrt(base^d).
    const Integer base = Integer(2 * d) * int_pow(2, 2 * static_cast<unsigned long>(b));
    const Rational log_base_up = log_upper(Rational(base));
    out.log_bound = Rational(Integer(d), Integer(2)) * log_base_up;

    const unsigned long value_bits =
        static_cast<unsigned long>(d) * (2 * static_cast<unsigned long>(b) + 2 +
                                         static_cast<unsigned long>(bit_size(Integer(d))));
    if (value_bits <= 1u << 20) {
        const Integer powered = int_pow(base, static_cast<unsigned long>(d));
        Rational bound_value;
        Integer root;
        if (perfect_square(powered, root))
            bound_value = Rational(root);
        else
            bound_value = sqrt_upper(Rational(powered));
        out.bound = LogScaleRational::value(bound_value);
        out.cleared_bound = LogScaleRational::value(
            bound_value * Rational(int_pow(2, static_cast<unsigned long>(b) *
                                                  static_cast<unsigned long>(d))));
    } else {
        out.bound = LogScaleRational::exp_of(out.log_bound);
        out.cleared_bound = LogScaleRational::exp_of(
            out.log_bound + Rational(Integer(b) * Integer(d)) * log2_upper());
    }
    return out;
}

Rational eigenvalue_height_bound(int d, int b) {
    require_positive(d, b);
    return Rational(Integer(3) * Integer(b) * Integer(d) * Integer(d));
}

HeightBound eigenvalue_height_profile(int d, int b) {
    require_positive(d, b);
    HeightBound out;
    out.log_height_bound = eigenvalue_height_bound(d, b);
    out.degree_bound = d;
    // log H <= n (h + log 2)  =>  H <= 2^{ceil(n (h + log2) / log 2)}.
    const Rational log_h = Rational(Integer(d)) * (out.log_height_bound + log2_upper());
    const Integer exponent = ceil_int(log_h / log2_lower());
    if (exponent > Integer(1u << 24))
        throw std::overflow_error("naive height bound exceeds the materialization cap");
    out.naive_height_bound = int_pow(2, exponent.convert_to<unsigned long>());
    return out;
}

Rational mignotte_separation(const IntPolynomial& p) {
    if (p.degree() < 2)
        throw std::invalid_argument("separation bound needs degree >= 2");
    const unsigned long n = static_cast<unsigned long>(p.degree());
    const Integer h = naive_height(p);
    // denominator^2 = n^{n+1} H^{2(n-1)} exactly; round the root upward.
    const Integer den_sq = int_pow(Integer(n), n + 1) * int_pow(h, 2 * (n - 1));
    Integer root;
    Rational den_up;
    if (perfect_square(den_sq, root))
        den_up = Rational(root);
    else
        den_up = sqrt_upper(Rational(den_sq));
    return sqrt6_lower() / den_up;
}

namespace {

Integer inverse_eigenvalue_exponent(int d, int b) {
    require_positive(d, b);
    // 4^{3 b d^3} = 2^{6 b d^3}.
    return Integer(6) * Integer(b) * Integer(d) * Integer(d) * Integer(d);
}

}  // namespace

LogScaleRational inverse_eigenvalue_bound(int d, int b) {
    const Integer e2 = inverse_eigenvalue_exponent(d, b);
    if (e2 <= Integer(10000000))
        return LogScaleRational::value(Rational(int_pow(2, e2.convert_to<unsigned long>())));
    return LogScaleRational::exp_of(Rational(e2) * log2_upper());
}

Rational inverse_eigenvalue_floor(int d, int b) {
    const Integer e2 = inverse_eigenvalue_exponent(d, b);
    if (e2 > Integer(10000000))
        throw std::overflow_error("eigenvalue floor exceeds the materialization cap");
    return Rational(Integer(1), int_pow(2, e2.convert_to<unsigned long>()));
}

}  // namespace polyescape
