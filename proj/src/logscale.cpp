#include "polyescape/logscale.hpp"

#include "polyescape/directed.hpp"

#include <mpfr.h>

#include <sstream>
#include <stdexcept>

namespace polyescape {

LogScaleRational LogScaleRational::value(Rational v) {
    if (v < 0) throw std::domain_error("log-scale quantities are nonnegative");
    return LogScaleRational(true, std::move(v));
}

LogScaleRational LogScaleRational::exp_of(Rational log_exponent) {
    return LogScaleRational(false, std::move(log_exponent));
}

const Rational& LogScaleRational::exact_value() const {
    if (!is_value_) throw std::logic_error("quantity is carried in log scale, not as a value");
    return payload_;
}

const Rational& LogScaleRational::log_exponent() const {
    if (is_value_) throw std::logic_error("quantity is carried as a value, not in log scale");
    return payload_;
}

Rational LogScaleRational::log_upper_bound() const {
    if (!is_value_) return payload_;
    return log_upper(payload_);  // throws on zero, as it must
}

Rational LogScaleRational::log_lower_bound() const {
    if (!is_value_) return payload_;
    return log_lower(payload_);
}

LogScaleRational add_upper(const LogScaleRational& a, const LogScaleRational& b) {
    if (a.is_value_ && b.is_value_)
        return LogScaleRational::value(a.payload_ + b.payload_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // a + b <= 2 max(a, b) = exp(log 2 + max(log a, log b)).
    const Rational la = a.log_upper_bound();
    const Rational lb = b.log_upper_bound();
    return LogScaleRational::exp_of(log2_upper() + (la > lb ? la : lb));
}

LogScaleRational scale_upper(const LogScaleRational& a, const Rational& k) {
    if (k < 0) throw std::domain_error("log-scale scaling factor must be nonnegative");
    if (a.is_value_) return LogScaleRational::value(a.payload_ * k);
    if (k == 0) return LogScaleRational::value(Rational(0));
    return LogScaleRational::exp_of(a.payload_ + log_upper(k));
}

LogScaleRational max_upper(const LogScaleRational& a, const LogScaleRational& b) {
    if (certified_leq(a, b)) return b;
    if (certified_leq(b, a)) return a;
    // Incomparable within the directed window: cover both.
    const Rational la = a.log_upper_bound();
    const Rational lb = b.log_upper_bound();
    return LogScaleRational::exp_of(la > lb ? la : lb);
}

LogScaleRational ceil_upper(const LogScaleRational& a) {
    if (a.is_value_) return LogScaleRational::value(Rational(ceil_int(a.payload_)));
    // ceil(y) <= 2y for y >= 1; exp-form quantities in certificates are huge,
    // but stay sound for small ones too by covering with max(1, ...) first.
    if (a.payload_ >= 0) return LogScaleRational::exp_of(a.payload_ + log2_upper());
    return LogScaleRational::value(Rational(1));  // 0 < y <= 1 => ceil = 1
}

bool certified_leq(const LogScaleRational& a, const LogScaleRational& b) {
    if (a.is_value_ && b.is_value_) return a.payload_ <= b.payload_;
    if (!a.is_value_ && !b.is_value_) return a.payload_ <= b.payload_;
    if (a.is_value_) {
        if (a.payload_ <= 0) return true;
        return log_upper(a.payload_) <= b.payload_;
    }
    if (b.payload_ <= 0) return false;
    return a.payload_ <= log_lower(b.payload_);
}

bool exactly_equal(const LogScaleRational& a, const LogScaleRational& b) {
    return a.is_value() == b.is_value() &&
           (a.is_value() ? a.exact_value() == b.exact_value()
                         : a.log_exponent() == b.log_exponent());
}

std::string LogScaleRational::approx_decimal() const {
    if (is_value_) return to_decimal_string(payload_, 12);

    // Render exp(x) as "exp(<x>) ~ m * 10^k" when the decimal exponent fits,
    // else just "exp(<x>)". Display-only; fixed precision keeps it deterministic.
    std::ostringstream out;
    out << "exp(" << to_decimal_string(payload_, 12) << ")";

    if (abs(payload_) <= pow2(40)) {
        mpfr_t x, l10, k;
        mpfr_init2(x, 256);
        mpfr_init2(l10, 256);
        mpfr_init2(k, 256);
        mpfr_set_q(x, payload_.backend().data(), MPFR_RNDN);
        mpfr_set_ui(l10, 10, MPFR_RNDN);
        mpfr_log(l10, l10, MPFR_RNDN);
        mpfr_div(k, x, l10, MPFR_RNDN);
        mpfr_t kf;
        mpfr_init2(kf, 256);
        mpfr_floor(kf, k);
        const long kexp = mpfr_get_si(kf, MPFR_RNDN);
        mpfr_sub(k, k, kf, MPFR_RNDN);  // fractional part
        mpfr_t mant;
        mpfr_init2(mant, 256);
        mpfr_ui_pow(mant, 10, k, MPFR_RNDN);
        const double m = mpfr_get_d(mant, MPFR_RNDN);
        std::ostringstream approx;
        approx.precision(3);
        approx << " ~ " << std::fixed << m << "e" << (kexp >= 0 ? "+" : "") << kexp;
        out << approx.str();
        mpfr_clears(x, l10, k, kf, mant, nullptr);
    }
    return out.str();
}

}  // namespace polyescape
