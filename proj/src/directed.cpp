#include "polyescape/directed.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <stdexcept>

namespace polyescape {

namespace {

constexpr mpfr_prec_t kPrecision = 192;

// Exact rational value of an mpfr number (always exactly representable:
// binary floating point is dyadic).
Rational to_rational(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rational(0);
    if (!mpfr_number_p(x)) throw std::overflow_error("directed constant overflowed");
    Integer mant;
    const mpfr_exp_t e = mpfr_get_z_2exp(mant.backend().data(), x);
    Rational out(mant);
    if (e >= 0) {
        Integer scale = 1;
        scale <<= static_cast<unsigned long>(e);
        out *= Rational(scale);
    } else {
        Integer scale = 1;
        scale <<= static_cast<unsigned long>(-e);
        out /= Rational(scale);
    }
    return out;
}

class Scoped {
public:
    Scoped() { mpfr_init2(x_, kPrecision); }
    explicit Scoped(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
    ~Scoped() { mpfr_clear(x_); }
    Scoped(const Scoped&) = delete;
    Scoped& operator=(const Scoped&) = delete;
    mpfr_t& get() { return x_; }

private:
    mpfr_t x_;
};

Rational directed_log(const Rational& x, mpfr_rnd_t rnd) {
    if (x <= 0) throw std::domain_error("logarithm of a non-positive rational");
    Scoped t;
    mpfr_set_q(t.get(), x.backend().data(), rnd);
    mpfr_log(t.get(), t.get(), rnd);
    return to_rational(t.get());
}

}  // namespace

Rational log_upper(const Rational& x) { return directed_log(x, MPFR_RNDU); }
Rational log_lower(const Rational& x) { return directed_log(x, MPFR_RNDD); }

namespace {

Rational directed_exp(const Rational& x, mpfr_rnd_t rnd) {
    Scoped t;
    mpfr_set_q(t.get(), x.backend().data(), rnd);
    mpfr_exp(t.get(), t.get(), rnd);
    if (mpfr_inf_p(t.get())) throw std::overflow_error("exponential overflowed the float range");
    return to_rational(t.get());
}

}  // namespace

Rational exp_upper(const Rational& x) { return directed_exp(x, MPFR_RNDU); }
Rational exp_lower(const Rational& x) { return directed_exp(x, MPFR_RNDD); }

const Rational& log2_upper() {
    static const Rational v = [] {
        Scoped t;
        mpfr_const_log2(t.get(), MPFR_RNDU);
        return to_rational(t.get());
    }();
    return v;
}

const Rational& log2_lower() {
    static const Rational v = [] {
        Scoped t;
        mpfr_const_log2(t.get(), MPFR_RNDD);
        return to_rational(t.get());
    }();
    return v;
}

const Rational& pi_upper() {
    static const Rational v = [] {
        Scoped t;
        mpfr_const_pi(t.get(), MPFR_RNDU);
        return to_rational(t.get());
    }();
    return v;
}

const Rational& pi_lower() {
    static const Rational v = [] {
        Scoped t;
        mpfr_const_pi(t.get(), MPFR_RNDD);
        return to_rational(t.get());
    }();
    return v;
}

const Rational& sqrt6_lower() {
    static const Rational v = [] {
        Scoped t;
        mpfr_set_ui(t.get(), 6, MPFR_RNDD);
        mpfr_sqrt(t.get(), t.get(), MPFR_RNDD);
        return to_rational(t.get());
    }();
    return v;
}

const Rational& e_upper() {
    static const Rational v = [] {
        Scoped t;
        mpfr_set_ui(t.get(), 1, MPFR_RNDU);
        mpfr_exp(t.get(), t.get(), MPFR_RNDU);
        return to_rational(t.get());
    }();
    return v;
}

namespace {

Rational directed_sqrt(const Rational& x, mpfr_rnd_t rnd) {
    if (x < 0) throw std::domain_error("square root of a negative rational");
    if (x == 0) return Rational(0);
    Integer num_root, den_root;
    if (perfect_square(numerator(x), num_root) && perfect_square(denominator(x), den_root))
        return Rational(num_root, den_root);
    Scoped t;
    mpfr_set_q(t.get(), x.backend().data(), rnd);
    mpfr_sqrt(t.get(), t.get(), rnd);
    return to_rational(t.get());
}

}  // namespace

Rational sqrt_upper(const Rational& x) { return directed_sqrt(x, MPFR_RNDU); }
Rational sqrt_lower(const Rational& x) { return directed_sqrt(x, MPFR_RNDD); }

namespace {

Rational directed_arg(const Rational& re, const Rational& im, mpfr_rnd_t rnd) {
    if (im <= 0) throw std::domain_error("argument enclosure needs a positive imaginary part");
    // On the upper half plane, atan2(y, x) is strictly decreasing in x, while
    // its monotonicity in y flips with the sign of x. Round x away from the
    // target side first, then pick y's rounding from the sign of the rounded x.
    const bool up = rnd == MPFR_RNDU;
    Scoped y, x;
    mpfr_set_q(x.get(), re.backend().data(), up ? MPFR_RNDD : MPFR_RNDU);
    const int xs = mpfr_sgn(x.get());
    mpfr_rnd_t y_rnd;
    if (xs > 0)
        y_rnd = up ? MPFR_RNDU : MPFR_RNDD;  // increasing in y
    else
        y_rnd = up ? MPFR_RNDD : MPFR_RNDU;  // decreasing in y (or constant at x = 0)
    mpfr_set_q(y.get(), im.backend().data(), y_rnd);
    mpfr_atan2(y.get(), y.get(), x.get(), rnd);
    return to_rational(y.get());
}

}  // namespace

Rational arg_upper(const Rational& re, const Rational& im) {
    return directed_arg(re, im, MPFR_RNDU);
}

Rational arg_lower(const Rational& re, const Rational& im) {
    return directed_arg(re, im, MPFR_RNDD);
}

Rational root_upper(const Rational& x, unsigned long n) {
    if (x <= 0) throw std::domain_error("root of a non-positive rational");
    if (n == 0) throw std::domain_error("zeroth root");
    if (n == 1) return x;
    Scoped t;
    mpfr_set_q(t.get(), x.backend().data(), MPFR_RNDU);
    mpfr_rootn_ui(t.get(), t.get(), n, MPFR_RNDU);
    return to_rational(t.get());
}

}  // namespace polyescape
