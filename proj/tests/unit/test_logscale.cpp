#include "polyescape/logscale.hpp"

#include "polyescape/directed.hpp"

#include "doctest.h"

#include <stdexcept>
#include <string>

using namespace polyescape;

TEST_CASE("construction and form accessors") {
    const LogScaleRational zero;
    CHECK(zero.is_value());
    CHECK(zero.is_zero());
    CHECK(zero.exact_value() == 0);

    const LogScaleRational v = LogScaleRational::value(Rational(3, 2));
    CHECK(v.is_value());
    CHECK_FALSE(v.is_zero());
    CHECK(v.exact_value() == Rational(3, 2));
    CHECK_THROWS_AS(v.log_exponent(), std::logic_error);

    const LogScaleRational e = LogScaleRational::exp_of(Rational(5));
    CHECK_FALSE(e.is_value());
    CHECK(e.log_exponent() == Rational(5));
    CHECK_THROWS_AS(e.exact_value(), std::logic_error);

    CHECK_THROWS_AS(LogScaleRational::value(Rational(-1)), std::domain_error);
}

TEST_CASE("addition is exact on values and a certified doubling across forms") {
    const LogScaleRational s =
        add_upper(LogScaleRational::value(Rational(3, 2)), LogScaleRational::value(Rational(1, 2)));
    REQUIRE(s.is_value());
    CHECK(s.exact_value() == Rational(2));

    // exp + exp: covered by 2 max = exp(log 2 + max exponent)
    const LogScaleRational ee =
        add_upper(LogScaleRational::exp_of(Rational(3)), LogScaleRational::exp_of(Rational(5)));
    CHECK(ee.log_exponent() == Rational(5) + log2_upper());

    // adding zero preserves the other operand exactly
    CHECK(exactly_equal(add_upper(LogScaleRational::value(Rational(0)),
                                  LogScaleRational::exp_of(Rational(7))),
                        LogScaleRational::exp_of(Rational(7))));

    // value + exp with the exp side dominant
    const LogScaleRational ve =
        add_upper(LogScaleRational::value(Rational(2)), LogScaleRational::exp_of(Rational(10)));
    CHECK(ve.log_exponent() == Rational(10) + log2_upper());
}

TEST_CASE("scaling") {
    CHECK(scale_upper(LogScaleRational::value(Rational(3)), Rational(5, 2)).exact_value() ==
          Rational(15, 2));
    const LogScaleRational scaled = scale_upper(LogScaleRational::exp_of(Rational(4)), Rational(8));
    CHECK(scaled.log_exponent() == Rational(4) + log_upper(Rational(8)));
    // scaling any quantity by zero collapses to the exact value zero
    CHECK(scale_upper(LogScaleRational::exp_of(Rational(1000)), Rational(0)).is_zero());
    CHECK_THROWS_AS(scale_upper(LogScaleRational::value(Rational(1)), Rational(-1)),
                    std::domain_error);
}

TEST_CASE("max picks the certified larger side and covers incomparable pairs") {
    const LogScaleRational three = LogScaleRational::value(Rational(3));
    const LogScaleRational small = LogScaleRational::exp_of(Rational(1));
    CHECK(exactly_equal(max_upper(three, small), three));
    CHECK(exactly_equal(max_upper(small, three), three));

    // a value and an exp exponent inside the directed window around log 3 are
    // incomparable; the cover is exp of the larger upper log bound
    const Rational mid = (log_upper(Rational(3)) + log_lower(Rational(3))) / 2;
    const LogScaleRational near = LogScaleRational::exp_of(mid);
    const LogScaleRational cover = max_upper(three, near);
    CHECK_FALSE(cover.is_value());
    CHECK(cover.log_exponent() == log_upper(Rational(3)));
}

TEST_CASE("ceiling") {
    CHECK(ceil_upper(LogScaleRational::value(Rational(7, 2))).exact_value() == Rational(4));
    CHECK(ceil_upper(LogScaleRational::value(Rational(5))).exact_value() == Rational(5));
    CHECK(ceil_upper(LogScaleRational::exp_of(Rational(3))).log_exponent() ==
          Rational(3) + log2_upper());
    // exp(x) with x < 0 lies in (0, 1), whose ceiling is exactly 1
    CHECK(ceil_upper(LogScaleRational::exp_of(Rational(-1, 2))).exact_value() == Rational(1));
}

TEST_CASE("certified comparison") {
    const auto val = [](long n) { return LogScaleRational::value(Rational(n)); };
    CHECK(certified_leq(val(2), val(2)));
    CHECK(certified_leq(val(1), val(2)));
    CHECK_FALSE(certified_leq(val(2), val(1)));

    CHECK(certified_leq(LogScaleRational::exp_of(Rational(3)), LogScaleRational::exp_of(Rational(3))));
    CHECK_FALSE(certified_leq(LogScaleRational::exp_of(Rational(4)),
                              LogScaleRational::exp_of(Rational(3))));

    // zero is below any exp-form quantity, even exp of a very negative exponent
    CHECK(certified_leq(val(0), LogScaleRational::exp_of(Rational(-100))));
    // 1 = exp(0) <= exp(1)
    CHECK(certified_leq(val(1), LogScaleRational::exp_of(Rational(1))));
    // exp(1) <= 3 holds (log 3 > 1); exp(2) <= 3 fails (log 3 < 2)
    CHECK(certified_leq(LogScaleRational::exp_of(Rational(1)), val(3)));
    CHECK_FALSE(certified_leq(LogScaleRational::exp_of(Rational(2)), val(3)));
    // no positive exp-form quantity fits below zero
    CHECK_FALSE(certified_leq(LogScaleRational::exp_of(Rational(-5)), val(0)));

    CHECK(certified_geq(val(3), LogScaleRational::exp_of(Rational(1))));
}

TEST_CASE("structural equality distinguishes forms") {
    CHECK(exactly_equal(LogScaleRational::value(Rational(2)), LogScaleRational::value(Rational(2))));
    CHECK_FALSE(
        exactly_equal(LogScaleRational::value(Rational(2)), LogScaleRational::value(Rational(3))));
    CHECK(exactly_equal(LogScaleRational::exp_of(Rational(5)), LogScaleRational::exp_of(Rational(5))));
    CHECK_FALSE(exactly_equal(LogScaleRational::value(Rational(2)),
                              LogScaleRational::exp_of(log_upper(Rational(2)))));
}

TEST_CASE("log bounds bracket the quantity tightly") {
    const LogScaleRational v = LogScaleRational::value(Rational(3));
    CHECK(v.log_lower_bound() <= v.log_upper_bound());
    CHECK(v.log_upper_bound() - v.log_lower_bound() <= pow2(-100));
    // for a value above 1 the log bounds are positive; below 1, negative
    CHECK(v.log_lower_bound() > 0);
    CHECK(LogScaleRational::value(Rational(1, 3)).log_upper_bound() < 0);

    const LogScaleRational e = LogScaleRational::exp_of(Rational(7, 3));
    CHECK(e.log_upper_bound() == Rational(7, 3));
    CHECK(e.log_lower_bound() == Rational(7, 3));
}

TEST_CASE("decimal rendering") {
    CHECK(LogScaleRational::value(Rational(1, 8)).approx_decimal() == std::string("0.125"));
    const std::string big = LogScaleRational::exp_of(Rational(3200)).approx_decimal();
    CHECK(big.find("exp(3200)") == 0);
    CHECK(big.find("e+1389") != std::string::npos);
    // payloads too large for a double-based tail render as a bare exponent
    CHECK(LogScaleRational::exp_of(Rational(pow2(50))).approx_decimal() ==
          std::string("exp(1.12589990684e+15)"));
}
