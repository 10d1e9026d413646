#include "polyescape/ball.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace polyescape {

namespace {

constexpr mpfr_prec_t kRadPrecision = 64;

}  // namespace

Rational mpfr_to_rational(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Rational(0);
    if (!mpfr_number_p(x)) throw std::overflow_error("non-finite high-precision value");
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

Ball::Ball(mpfr_prec_t prec) : mid_(prec), rad_(kRadPrecision) {}

void Ball::bump_rounding() {
    // Midpoint rounding error of the last RNDN operation is at most one ulp:
    // 2^{exp(mid) - prec}. Zero results are exact.
    if (mpfr_zero_p(mid_.get())) return;
    BigFloat ulp(kRadPrecision);
    mpfr_set_ui_2exp(ulp.get(), 1,
                     mpfr_get_exp(mid_.get()) - mpfr_get_prec(mid_.get()), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
}

Ball Ball::exact(const Rational& q, mpfr_prec_t prec) {
    Ball out(prec);
    const int t = mpfr_set_q(out.mid_.get(), q.backend().data(), MPFR_RNDN);
    if (t != 0) out.bump_rounding();
    return out;
}

Ball Ball::exact_int(long v, mpfr_prec_t prec) {
    Ball out(prec);
    const int t = mpfr_set_si(out.mid_.get(), v, MPFR_RNDN);
    if (t != 0) out.bump_rounding();
    return out;
}

mpfr_prec_t Ball::precision() const { return mpfr_get_prec(mid_.get()); }

Ball Ball::operator+(const Ball& other) const {
    Ball out(std::max(precision(), other.precision()));
    const int t = mpfr_add(out.mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);
    mpfr_add(out.rad_.get(), rad_.get(), other.rad_.get(), MPFR_RNDU);
    if (t != 0) out.bump_rounding();
    return out;
}

Ball Ball::operator-(const Ball& other) const {
    Ball out(std::max(precision(), other.precision()));
    const int t = mpfr_sub(out.mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);
    mpfr_add(out.rad_.get(), rad_.get(), other.rad_.get(), MPFR_RNDU);
    if (t != 0) out.bump_rounding();
    return out;
}

Ball Ball::operator*(const Ball& other) const {
    Ball out(std::max(precision(), other.precision()));
    const int t = mpfr_mul(out.mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);

    // rad = |am| br + |bm| ar + ar br, every step rounded upward.
    BigFloat am(kRadPrecision), bm(kRadPrecision), acc(kRadPrecision), tmp(kRadPrecision);
    mpfr_abs(am.get(), mid_.get(), MPFR_RNDU);
    mpfr_abs(bm.get(), other.mid_.get(), MPFR_RNDU);
    mpfr_mul(acc.get(), am.get(), other.rad_.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), bm.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), rad_.get(), other.rad_.get(), MPFR_RNDU);
    mpfr_add(out.rad_.get(), acc.get(), tmp.get(), MPFR_RNDU);
    if (t != 0) out.bump_rounding();
    return out;
}

Ball Ball::operator/(const Ball& other) const {
    if (!other.certainly_nonzero())
        throw std::domain_error("division by an interval containing zero");
    Ball out(std::max(precision(), other.precision()));
    const int t = mpfr_div(out.mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);

    // |x/y - xm/ym| <= (xr |ym| + |xm| yr) / (|ym| (|ym| - yr)); numerator
    // rounded up, denominator rounded down.
    BigFloat am(kRadPrecision), bm(kRadPrecision), num(kRadPrecision), tmp(kRadPrecision),
        den(kRadPrecision);
    mpfr_abs(am.get(), mid_.get(), MPFR_RNDU);
    mpfr_abs(bm.get(), other.mid_.get(), MPFR_RNDU);
    mpfr_mul(num.get(), rad_.get(), bm.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), am.get(), other.rad_.get(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), tmp.get(), MPFR_RNDU);

    mpfr_abs(den.get(), other.mid_.get(), MPFR_RNDD);
    mpfr_sub(tmp.get(), den.get(), other.rad_.get(), MPFR_RNDD);
    mpfr_mul(den.get(), den.get(), tmp.get(), MPFR_RNDD);

    mpfr_div(out.rad_.get(), num.get(), den.get(), MPFR_RNDU);
    if (t != 0) out.bump_rounding();
    return out;
}

Ball Ball::operator-() const {
    Ball out(precision());
    mpfr_neg(out.mid_.get(), mid_.get(), MPFR_RNDN);  // exact
    mpfr_set(out.rad_.get(), rad_.get(), MPFR_RNDU);
    return out;
}

void Ball::scale_pow2(long e) {
    mpfr_mul_2si(mid_.get(), mid_.get(), e, MPFR_RNDN);  // exact
    mpfr_mul_2si(rad_.get(), rad_.get(), e, MPFR_RNDU);
}

void Ball::widen(const Rational& tau) {
    if (tau < 0) throw std::domain_error("radius enlargement must be nonnegative");
    if (tau == 0) return;
    mpfr_add_q(rad_.get(), rad_.get(), tau.backend().data(), MPFR_RNDU);
}

Rational Ball::lower() const { return mpfr_to_rational(mid_.get()) - mpfr_to_rational(rad_.get()); }
Rational Ball::upper() const { return mpfr_to_rational(mid_.get()) + mpfr_to_rational(rad_.get()); }
Rational Ball::midpoint() const { return mpfr_to_rational(mid_.get()); }
Rational Ball::radius() const { return mpfr_to_rational(rad_.get()); }

bool Ball::certainly_gt(const Rational& c) const {
    BigFloat lo(mpfr_get_prec(mid_.get()));
    mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return mpfr_cmp_q(lo.get(), c.backend().data()) > 0;
}

bool Ball::certainly_lt(const Rational& c) const {
    BigFloat hi(mpfr_get_prec(mid_.get()));
    mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return mpfr_cmp_q(hi.get(), c.backend().data()) < 0;
}

bool Ball::certainly_nonzero() const {
    return mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

Rational Ball::abs_upper() const {
    BigFloat t(kRadPrecision);
    mpfr_abs(t.get(), mid_.get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), rad_.get(), MPFR_RNDU);
    return mpfr_to_rational(t.get());
}

std::string Ball::to_string(int digits) const {
    std::ostringstream out;
    out << to_decimal_string(midpoint(), digits);
    const Rational r = radius();
    if (r != 0) out << " +- " << to_decimal_string(r, 3);
    return out.str();
}

BallMatrix::BallMatrix(std::size_t rows, std::size_t cols, mpfr_prec_t prec)
    : rows_(rows), cols_(cols), a_(rows * cols, Ball(prec)) {}

BallMatrix BallMatrix::identity(std::size_t n, mpfr_prec_t prec) {
    BallMatrix out(n, n, prec);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = Ball::exact_int(1, prec);
    return out;
}

BallMatrix BallMatrix::exact(const RatMatrix& m, mpfr_prec_t prec) {
    BallMatrix out(m.rows(), m.cols(), prec);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = Ball::exact(m.at(i, j), prec);
    return out;
}

BallMatrix BallMatrix::operator*(const BallMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("ball matmul: shape mismatch");
    const mpfr_prec_t prec =
        std::max(a_.empty() ? kRadPrecision : a_[0].precision(),
                 other.a_.empty() ? kRadPrecision : other.a_[0].precision());
    BallMatrix out(rows_, other.cols_, prec);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) {
            Ball acc(prec);
            for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * other.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    return out;
}

std::vector<Ball> BallMatrix::operator*(const std::vector<Ball>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("ball matvec: shape mismatch");
    const mpfr_prec_t prec = a_.empty() ? kRadPrecision : a_[0].precision();
    std::vector<Ball> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Ball acc(prec);
        for (std::size_t j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[j];
        out.push_back(std::move(acc));
    }
    return out;
}

BallMatrix BallMatrix::operator*(const Ball& s) const {
    BallMatrix out = *this;
    for (auto& e : out.a_) e = e * s;
    return out;
}

BallMatrix BallMatrix::operator+(const BallMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("ball matrix add: shape mismatch");
    BallMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
    return out;
}

void BallMatrix::scale_pow2(long e) {
    for (auto& x : a_) x.scale_pow2(e);
}

Rational BallMatrix::inf_norm_upper() const {
    Rational best = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational row = 0;
        for (std::size_t j = 0; j < cols_; ++j) row += at(i, j).abs_upper();
        if (row > best) best = row;
    }
    return best;
}

Rational BallMatrix::max_radius() const {
    Rational best = 0;
    for (const auto& x : a_) {
        Rational r = x.radius();
        if (r > best) best = r;
    }
    return best;
}

namespace {

// One evaluation of exp(A t) at fixed working precision: scale A t by 2^{-s}
// until the infinity norm is at most 1/2, sum the Taylor series with a
// rigorous geometric tail bound absorbed into every entry, then square s
// times.
BallMatrix exp_attempt(const RatMatrix& a, const Ball& t, mpfr_prec_t wp) {
    const std::size_t d = a.rows();
    BallMatrix n = BallMatrix::exact(a, wp) * t;

    Rational norm = n.inf_norm_upper();
    long s = 0;
    const Rational half(1, 2);
    while (norm > half) {
        norm /= 2;
        ++s;
    }
    if (s > 0) n.scale_pow2(-s);

    BallMatrix total = BallMatrix::identity(d, wp);
    BallMatrix term = BallMatrix::identity(d, wp);
    Rational term_norm = 1;  // upper bound on ||N^k / k!||_inf
    const Rational tail_target = pow2(-(static_cast<long>(wp) - 8));
    Rational tau = 0;
    for (unsigned long k = 1;; ++k) {
        term = term * n;
        term = term * Ball::exact(Rational(1, Integer(k)), wp);
        total = total + term;
        term_norm = term_norm * norm / Integer(k);
        // Remaining tail <= next_term_bound * sum_{i>=0} (norm/(k+2))^i and
        // norm <= 1/2, so the geometric factor is at most 2.
        const Rational next_term_bound = term_norm * norm / Integer(k + 1);
        tau = 2 * next_term_bound;
        if (tau <= tail_target) break;
        if (k > 200000)
            throw PrecisionExhausted("matrix exponential series failed to converge");
    }

    if (tau > 0)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) total.at(i, j).widen(tau);

    for (long i = 0; i < s; ++i) total = total * total;
    return total;
}

MatrixExpResult exp_with_retries(const RatMatrix& a, const Rational& t_mid,
                                 const Rational& t_rad, unsigned precision_bits) {
    if (!a.is_square())
        throw std::invalid_argument("matrix exponential requires a square matrix");
    if (precision_bits < 8) precision_bits = 8;
    const Rational target = pow2(-static_cast<long>(precision_bits / 2));
    mpfr_prec_t wp = static_cast<mpfr_prec_t>(precision_bits) + 64;
    const mpfr_prec_t cap = std::max<mpfr_prec_t>(
        65536, static_cast<mpfr_prec_t>(16) * static_cast<mpfr_prec_t>(precision_bits));
    while (true) {
        Ball t = Ball::exact(t_mid, wp);
        if (t_rad != 0) t.widen(t_rad);
        BallMatrix value = exp_attempt(a, t, wp);
        Rational err = value.max_radius();
        if (err <= target) return MatrixExpResult{std::move(value), std::move(err), wp};
        if (wp >= cap)
            throw PrecisionExhausted(
                "matrix exponential: requested accuracy unreachable at precision cap");
        wp = std::min<mpfr_prec_t>(cap, wp * 2);
    }
}

}  // namespace

MatrixExpResult matrix_exp(const RatMatrix& a, const Rational& t, unsigned precision_bits) {
    return exp_with_retries(a, t, Rational(0), precision_bits);
}

MatrixExpResult matrix_exp(const RatMatrix& a, const Ball& t, unsigned precision_bits) {
    return exp_with_retries(a, t.midpoint(), t.radius(), precision_bits);
}

}  // namespace polyescape
