#pragma once

#include "polyescape/rational.hpp"

#include <string>

namespace polyescape {

// A nonnegative quantity carried either as an exact rational value or as
// exp(x) for an exact rational exponent x. The second form carries the
// astronomical bounds (e.g. exp(640 b d^{3d+8})) that no fixed-width type
// can materialize. All arithmetic provided here rounds UPWARD (results are
// certified >= the exact mathematical result), which is the only direction
// certificate assembly needs; comparisons are certified-directional.
class LogScaleRational {
public:
    LogScaleRational() : is_value_(true), payload_(0) {}

    static LogScaleRational value(Rational v);
    static LogScaleRational exp_of(Rational log_exponent);

    bool is_value() const { return is_value_; }
    // Exact rational value; throws std::logic_error on an exp-form quantity.
    const Rational& exact_value() const;
    // Exact natural-log exponent; throws std::logic_error on a value-form quantity.
    const Rational& log_exponent() const;

    bool is_zero() const { return is_value_ && payload_ == 0; }

    // Directed enclosure of ln(this); requires a positive quantity.
    Rational log_upper_bound() const;
    Rational log_lower_bound() const;

    // Deterministic human-facing rendering: exact-value decimals for value
    // form, "exp(x) ~ 10^k" for exp form.
    std::string approx_decimal() const;

private:
    LogScaleRational(bool is_value, Rational payload)
        : is_value_(is_value), payload_(std::move(payload)) {}

    bool is_value_;
    Rational payload_;

    friend LogScaleRational add_upper(const LogScaleRational&, const LogScaleRational&);
    friend LogScaleRational scale_upper(const LogScaleRational&, const Rational&);
    friend LogScaleRational max_upper(const LogScaleRational&, const LogScaleRational&);
    friend LogScaleRational ceil_upper(const LogScaleRational&);
    friend bool certified_leq(const LogScaleRational&, const LogScaleRational&);
    friend bool exactly_equal(const LogScaleRational&, const LogScaleRational&);
};

// Upper bound on a + b (exact when both are value-form; both must be >= 0).
LogScaleRational add_upper(const LogScaleRational& a, const LogScaleRational& b);

// Upper bound on k * a for an exact rational k >= 0 (exact for value-form a).
LogScaleRational scale_upper(const LogScaleRational& a, const Rational& k);

// Upper bound on max(a, b); picks the certified larger side when comparable.
LogScaleRational max_upper(const LogScaleRational& a, const LogScaleRational& b);

// Upper bound on ceil(a): exact ceiling for value form; for exp form (whose
// quantities here always exceed 1) a sound doubling cover.
LogScaleRational ceil_upper(const LogScaleRational& a);

// True means a <= b is PROVEN (exact in matching forms, directed across
// forms); false means the relation could not be certified.
bool certified_leq(const LogScaleRational& a, const LogScaleRational& b);
inline bool certified_geq(const LogScaleRational& a, const LogScaleRational& b) {
    return certified_leq(b, a);
}

// Structural equality (same form, same payload).
bool exactly_equal(const LogScaleRational& a, const LogScaleRational& b);

}  // namespace polyescape
