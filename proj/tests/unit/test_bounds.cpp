#include "polyescape/bounds.hpp"

#include "polyescape/directed.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>

using namespace polyescape;

namespace {

Polytope interval(const Rational& lo, const Rational& hi) {
    Polytope p;
    p.b = RatMatrix{{Rational(1)}, {Rational(-1)}};
    p.c = RatVector{hi, -lo};
    return p;
}

Polytope box2(const Rational& lo, const Rational& hi) {
    Polytope p;
    p.b = RatMatrix{{Rational(1), Rational(0)},
                    {Rational(-1), Rational(0)},
                    {Rational(0), Rational(1)},
                    {Rational(0), Rational(-1)}};
    p.c = RatVector{hi, -lo, hi, -lo};
    return p;
}

Instance growth() {
    Instance inst;
    inst.a = RatMatrix{{Rational(1, 8)}};
    inst.polytope = interval(Rational(1), Rational(2));
    return inst;
}

Instance rotation_box() {
    Instance inst;
    inst.a = RatMatrix{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}};
    inst.polytope = box2(Rational(1), Rational(2));
    return inst;
}

}  // namespace

TEST_CASE("ratio formula evaluates exp(640 b d^(3d+8)) exactly in log scale") {
    const LogScaleRational r22 = ratio_bound_formula(2, 2);
    CHECK_FALSE(r22.is_value());
    CHECK(r22.log_exponent() == Rational(20971520));

    CHECK(ratio_bound_formula(5, 1).log_exponent() == Rational(3200));

    // the worked 3-dimensional profile at 11 coefficient bits exceeds 10^4
    CHECK(certified_leq(LogScaleRational::value(Rational(10000)), ratio_bound_formula(11, 3)));
}

TEST_CASE("per-eigenvalue bounds: zero case") {
    const LogScaleRational ten = LogScaleRational::value(Rational(10));
    CHECK(t_lambda_zero(1, ten).exact_value() == Rational(10));
    CHECK(t_lambda_zero(2, ten).exact_value() == Rational(800));
    CHECK(t_lambda_zero(3, ten).exact_value() == Rational(21870000));
}

TEST_CASE("per-eigenvalue bounds: positive case") {
    // exp-form ratio makes the logarithm exact: t = (2^(k-1)/lambda) log(k ratio)
    const LogScaleRational p0 = t_lambda_positive(1, Rational(1), LogScaleRational::exp_of(Rational(1)));
    REQUIRE(p0.is_value());
    CHECK(p0.exact_value() == Rational(1));

    const LogScaleRational p1 = t_lambda_positive(2, Rational(1), LogScaleRational::exp_of(Rational(1)));
    CHECK(p1.exact_value() == Rational(2) + 2 * log2_upper());

    const LogScaleRational p2 = t_lambda_positive(1, pow2(-3), LogScaleRational::value(Rational(2)));
    CHECK(p2.exact_value() == 8 * log2_upper());

    // value-form ratio e (directed upper): log rounds to just above 1
    const LogScaleRational pe = t_lambda_positive(1, Rational(1), LogScaleRational::value(e_upper()));
    REQUIRE(pe.is_value());
    CHECK(pe.exact_value() >= Rational(1));
    CHECK(pe.exact_value() <= Rational(1) + pow2(-30));
}

TEST_CASE("per-eigenvalue bounds: negative case") {
    const LogScaleRational n0 = t_lambda_negative(1, Rational(1), LogScaleRational::exp_of(Rational(1)));
    REQUIRE(n0.is_value());
    CHECK(n0.exact_value() == 4 * log2_upper() + 2);

    // ratio 1 zeroes the b' term, leaving 4 a log(2a) alone
    const LogScaleRational n1 = t_lambda_negative(1, Rational(1), LogScaleRational::value(Rational(1)));
    CHECK(n1.exact_value() == 4 * log2_upper());
}

TEST_CASE("log-inequality threshold and its defining substitution") {
    CHECK(log_inequality_threshold(Rational(1), Rational(1)) == 4 * log2_upper() + 2);

    // t = threshold(a, b) satisfies t >= a log t + b, checked with the
    // directed upper log so the inequality is certified
    std::mt19937_64 rng(1203);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational a = Rational(1) + Rational(static_cast<long>(rng() % 29), 4);
        const Rational b(1 + static_cast<long>(rng() % 64), 1 + static_cast<long>(rng() % 4));
        const Rational t = log_inequality_threshold(a, b);
        CHECK(a * log_upper(t) + b <= t);
    }
}

TEST_CASE("real escape bound: case dispatch and the zero-index-one policy") {
    RatMatrix one(1, 1);
    one.at(0, 0) = Rational(1);
    const LogScaleRational r1 = real_escape_bound(spectrum(one, 64), LogScaleRational::exp_of(Rational(1)));
    REQUIRE(r1.is_value());
    CHECK(r1.exact_value() == Rational(2));

    RatMatrix zero(1, 1);
    const Spectrum sz = spectrum(zero, 64);
    const LogScaleRational ten = LogScaleRational::value(Rational(10));
    CHECK(real_escape_bound(sz, ten, ZeroIndexOnePolicy::FormulaValue).exact_value() ==
          Rational(20));
    CHECK(real_escape_bound(sz, ten, ZeroIndexOnePolicy::ZeroContribution).is_zero());

    // no real eigenvalues at all: zero
    const Spectrum rot = spectrum(rotation_box().a, 64);
    CHECK(real_escape_bound(rot, ten).is_zero());
}

TEST_CASE("complex hull time sums index * pi / theta upward") {
    const LogScaleRational h = complex_hull_time(spectrum(rotation_box().a, 128));
    REQUIRE(h.is_value());
    CHECK(h.exact_value() == pi_upper());

    RatMatrix rot2{{Rational(0), Rational(-2)}, {Rational(2), Rational(0)}};
    CHECK(complex_hull_time(spectrum(rot2, 128)).exact_value() == pi_upper() / 2);

    RatMatrix real2(2, 2);
    real2.at(0, 0) = Rational(1);
    real2.at(1, 1) = Rational(2);
    CHECK(complex_hull_time(spectrum(real2, 64)).is_zero());
}

TEST_CASE("instance bit size spans A, B and c") {
    CHECK(instance_bit_size(growth()) == 5);  // 1/8 -> 1 + 4 bits
    CHECK(instance_bit_size(rotation_box()) == 3);    // c entry 2 -> 2 + 1 bits
}

TEST_CASE("continuous certificate for pure growth") {
    const EscapeCertificate cert = continuous_escape_bound(growth());
    CHECK(cert.mode == Mode::Continuous);
    CHECK(cert.dimension == 1);
    CHECK(cert.coefficient_bits == 5);
    CHECK(cert.extra_steps == 0);
    CHECK(cert.ratio_source == RatioSource::ClosedFormFormula);
    CHECK(cert.ratio_bound.log_exponent() == Rational(3200));

    REQUIRE(cert.total_bound.is_value());
    CHECK(cert.total_bound.exact_value() == Rational(51200));
    CHECK(cert.complex_hull_time.is_zero());
    CHECK(cert.real_bound.exact_value() == Rational(51200));

    REQUIRE(cert.per_eigenvalue.size() == 1);
    CHECK(cert.per_eigenvalue[0].t_case == TLambdaCase::Positive);
    CHECK(cert.per_eigenvalue[0].t_lambda.exact_value() == Rational(25600));
    CHECK(cert.per_eigenvalue[0].eigenvalue.real_interval.lo == Rational(1, 8));

    CHECK(cert.special_case.diagonalizable);
    CHECK(cert.special_case.invertible);
    REQUIRE(cert.special_case_bound.has_value());
    CHECK(cert.special_case_bound->exact_value() == Rational(1024));  // 4^(5*1)

    CHECK(cert.closed_form_bound.log_exponent() == Rational(3200) + 2 * log2_upper());
    CHECK(certified_leq(cert.total_bound, cert.closed_form_bound));
}

TEST_CASE("continuous certificate for the rotation box") {
    const EscapeCertificate cert = continuous_escape_bound(rotation_box());
    CHECK(cert.dimension == 2);
    CHECK(cert.coefficient_bits == 3);
    REQUIRE(cert.total_bound.is_value());
    CHECK(cert.total_bound.exact_value() == pi_upper());
    CHECK(cert.real_bound.is_zero());
    CHECK(cert.complex_hull_time.exact_value() == pi_upper());
    CHECK(cert.special_case_bound->exact_value() == Rational(16777216));  // 4^(3*4)
    CHECK(certified_leq(cert.total_bound, cert.closed_form_bound));
}

TEST_CASE("continuous certificate for a two-rate diagonal system") {
    Instance diag;
    diag.a = RatMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(101, 100)}};
    diag.polytope = box2(Rational(1), Rational(2));
    const EscapeCertificate cert = continuous_escape_bound(diag);
    CHECK(cert.coefficient_bits == 14);  // 101/100 -> 7 + 7 bits
    CHECK(cert.total_bound.exact_value() == Rational(293601280));
    REQUIRE(cert.per_eigenvalue.size() == 2);
    // sorted spectrum: the unit rate first, then 101/100
    CHECK(cert.per_eigenvalue[0].t_lambda.exact_value() == Rational(146800640));
    CHECK(cert.per_eigenvalue[1].t_lambda.exact_value() == Rational(14680064000) / 101);
    CHECK(cert.special_case_bound->exact_value() == pow2(112));  // 4^(14*4)
    CHECK(certified_leq(cert.total_bound, cert.closed_form_bound));
}

TEST_CASE("affine dynamics are embedded before the bound is assembled") {
    Instance aff;
    aff.a = RatMatrix{{Rational(-1)}};
    aff.affine = RatVector{Rational(1)};
    aff.polytope = interval(Rational(2), Rational(3));
    const EscapeCertificate cert = continuous_escape_bound(aff);

    CHECK(cert.dimension == 2);  // embedded
    CHECK(cert.coefficient_bits == 3);
    REQUIRE(cert.total_bound.is_value());
    CHECK(cert.total_bound.exact_value() == Rational(125829120) + 8 * log2_upper());

    REQUIRE(cert.per_eigenvalue.size() == 2);
    CHECK(cert.per_eigenvalue[0].t_case == TLambdaCase::Negative);
    CHECK(cert.per_eigenvalue[0].t_lambda.exact_value() ==
          Rational(62914560) + 4 * log2_upper());
    // the embedding introduces a zero eigenvalue of index 1, whose coordinate
    // is pinned to 1 inside the polytope and contributes no escape time
    CHECK(cert.per_eigenvalue[1].t_case == TLambdaCase::Zero);
    CHECK(cert.per_eigenvalue[1].t_lambda.is_zero());

    CHECK(cert.special_case.diagonalizable);
    CHECK_FALSE(cert.special_case.invertible);
    CHECK(cert.special_case_bound->exact_value() == Rational(16777216));
    CHECK(certified_leq(cert.total_bound, cert.closed_form_bound));
}

TEST_CASE("discrete certificates: iteration counts with trailing settle steps") {
    Instance dbl;
    dbl.mode = Mode::Discrete;
    dbl.a = RatMatrix{{Rational(2)}};
    dbl.polytope = interval(Rational(1), Rational(3));
    const EscapeCertificate c1 = discrete_escape_bound(dbl);
    CHECK(c1.mode == Mode::Discrete);
    CHECK(c1.dimension == 1);
    CHECK(c1.coefficient_bits == 3);
    REQUIRE(c1.total_bound.is_value());
    CHECK(c1.total_bound.exact_value() == Rational(5541));
    CHECK(c1.extra_steps == 1);
    REQUIRE(c1.per_eigenvalue.size() == 1);
    // the enclosure shows the eigenvalue of A; the case classifies its log
    CHECK(c1.per_eigenvalue[0].eigenvalue.real_interval.lo == Rational(2));
    CHECK(c1.per_eigenvalue[0].t_case == TLambdaCase::Positive);

    Instance half = dbl;
    half.a.at(0, 0) = Rational(1, 2);
    half.polytope = interval(Rational(1), Rational(2));
    const EscapeCertificate c2 = discrete_escape_bound(half);
    CHECK(c2.total_bound.exact_value() == Rational(11094));
    CHECK(c2.extra_steps == 1);
    CHECK(c2.per_eigenvalue[0].t_case == TLambdaCase::Negative);

    Instance rot = rotation_box();
    rot.mode = Mode::Discrete;
    const EscapeCertificate c3 = discrete_escape_bound(rot);
    CHECK(c3.total_bound.exact_value() == Rational(5));
    CHECK(c3.extra_steps == 2);
    CHECK(certified_leq(c3.total_bound, c3.closed_form_bound));
}

TEST_CASE("bounds demand an all-escape verdict") {
    Instance frozen = growth();
    frozen.a.at(0, 0) = Rational(0);
    CHECK_THROWS_AS(continuous_escape_bound(frozen), std::invalid_argument);

    Instance unbounded = growth();
    unbounded.polytope.b = RatMatrix{{Rational(-1)}};
    unbounded.polytope.c = RatVector{Rational(-1)};
    CHECK_THROWS_AS(continuous_escape_bound(unbounded), std::invalid_argument);

    Instance id;
    id.mode = Mode::Discrete;
    id.a = RatMatrix{{Rational(1)}};
    id.polytope = interval(Rational(1), Rational(2));
    CHECK_THROWS_AS(discrete_escape_bound(id), std::invalid_argument);
}
