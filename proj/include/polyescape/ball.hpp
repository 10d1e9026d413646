#pragma once

#include "polyescape/linalg.hpp"
#include "polyescape/rational.hpp"

#include <mpfr.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyescape {

// Raised when a requested certified accuracy cannot be met within the
// maximum working precision.
class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Minimal RAII wrapper over an mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    BigFloat(const BigFloat& other) {
        mpfr_init2(x_, mpfr_get_prec(other.x_));
        mpfr_set(x_, other.x_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& other) noexcept {
        mpfr_init2(x_, mpfr_get_prec(other.x_));
        mpfr_swap(x_, other.x_);
    }
    BigFloat& operator=(const BigFloat& other) {
        if (this != &other) {
            mpfr_set_prec(x_, mpfr_get_prec(other.x_));
            mpfr_set(x_, other.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& other) noexcept {
        if (this != &other) mpfr_swap(x_, other.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

private:
    mpfr_t x_;
};

// Exact rational value of a finite mpfr number (binary floats are dyadic).
Rational mpfr_to_rational(mpfr_srcptr x);

// A real interval mid +- rad with arbitrary-precision midpoint and a short
// upward-rounded radius. All operations produce enclosures of the exact
// result; the radius absorbs both input radii and local rounding.
class Ball {
public:
    explicit Ball(mpfr_prec_t prec);
    static Ball exact(const Rational& q, mpfr_prec_t prec);
    static Ball exact_int(long v, mpfr_prec_t prec);

    mpfr_prec_t precision() const;

    Ball operator+(const Ball& other) const;
    Ball operator-(const Ball& other) const;
    Ball operator*(const Ball& other) const;
    // Requires the divisor to be certainly nonzero (|mid| > rad).
    Ball operator/(const Ball& other) const;
    Ball operator-() const;

    void scale_pow2(long e);  // multiply by 2^e exactly
    void widen(const Rational& tau);  // enlarge the radius by tau >= 0

    // Exact rational endpoints (dyadic).
    Rational lower() const;
    Rational upper() const;
    Rational midpoint() const;
    Rational radius() const;

    // Certified comparisons against exact rationals (false = not certifiable,
    // not "the opposite holds").
    bool certainly_gt(const Rational& c) const;
    bool certainly_lt(const Rational& c) const;
    bool certainly_nonzero() const;

    // Upper bound of |value| as a coarse Rational; cheap and sound.
    Rational abs_upper() const;

    const BigFloat& mid() const { return mid_; }
    const BigFloat& rad() const { return rad_; }

    std::string to_string(int digits = 12) const;

private:
    Ball(BigFloat mid, BigFloat rad) : mid_(std::move(mid)), rad_(std::move(rad)) {}
    void bump_rounding();  // absorb one ulp of the midpoint into the radius

    BigFloat mid_;
    BigFloat rad_;  // fixed short precision, always rounded upward
};

// Dense ball matrix (row-major).
class BallMatrix {
public:
    BallMatrix(std::size_t rows, std::size_t cols, mpfr_prec_t prec);
    static BallMatrix identity(std::size_t n, mpfr_prec_t prec);
    static BallMatrix exact(const RatMatrix& m, mpfr_prec_t prec);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Ball& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Ball& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    BallMatrix operator*(const BallMatrix& other) const;
    std::vector<Ball> operator*(const std::vector<Ball>& v) const;
    BallMatrix operator*(const Ball& s) const;
    BallMatrix operator+(const BallMatrix& other) const;

    void scale_pow2(long e);

    // Upper bound of the infinity norm (max row sum of |entries|).
    Rational inf_norm_upper() const;
    // Largest entry radius, as an exact rational.
    Rational max_radius() const;

private:
    std::size_t rows_, cols_;
    std::vector<Ball> a_;
};

struct MatrixExpResult {
    BallMatrix value;
    Rational error_bound;  // certified bound on every entry's radius
    mpfr_prec_t working_precision;
};

// exp(A t) by scaling-and-squaring over a rigorously tail-bounded Taylor sum.
// The certified entrywise error is required to be <= 2^(-precision_bits/2);
// working precision doubles internally until that holds, up to a cap, then
// PrecisionExhausted is thrown.
MatrixExpResult matrix_exp(const RatMatrix& a, const Rational& t, unsigned precision_bits);
MatrixExpResult matrix_exp(const RatMatrix& a, const Ball& t, unsigned precision_bits);

}  // namespace polyescape
