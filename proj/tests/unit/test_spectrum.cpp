#include "polyescape/spectrum.hpp"

#include "doctest.h"

using namespace polyescape;

namespace {

RatMatrix mat2(long a, long b, long c, long d) {
    RatMatrix m(2, 2);
    m.at(0, 0) = Rational(a);
    m.at(0, 1) = Rational(b);
    m.at(1, 0) = Rational(c);
    m.at(1, 1) = Rational(d);
    return m;
}

const Rational kWidthCap = pow2(-128);

}  // namespace

TEST_CASE("rotation matrix has one exact complex pair") {
    const Spectrum s = spectrum(mat2(0, -1, 1, 0), 128);
    REQUIRE(s.eigenvalues.size() == 1);
    const EigenvalueEnclosure& e = s.eigenvalues[0];
    CHECK(e.kind == EigenvalueKind::ComplexPair);
    CHECK(e.real_interval.is_point());
    CHECK(e.real_interval.lo == 0);
    CHECK(e.imag_interval.is_point());
    CHECK(e.imag_interval.lo == 1);
    CHECK(e.index == 1);
    CHECK(e.alg_multiplicity == 1);
    CHECK(real_part_sign(e) == SignClass::Zero);
}

TEST_CASE("rational eigenvalues come back as exact points") {
    RatMatrix a(2, 2);
    a.at(0, 0) = Rational(1);
    a.at(1, 1) = Rational(101, 100);
    const Spectrum s = spectrum(a, 128);
    REQUIRE(s.eigenvalues.size() == 2);
    CHECK(s.eigenvalues[0].kind == EigenvalueKind::PositiveReal);
    CHECK(s.eigenvalues[0].real_interval.is_point());
    CHECK(s.eigenvalues[0].real_interval.lo == Rational(1));
    CHECK(s.eigenvalues[1].real_interval.is_point());
    CHECK(s.eigenvalues[1].real_interval.lo == Rational(101, 100));
    CHECK(real_part_sign(s.eigenvalues[0]) == SignClass::Positive);
}

TEST_CASE("defective eigenvalue carries its minimal-polynomial index") {
    // upper bidiagonal block: eigenvalue 1 with a 2-chain, plus 101/100
    RatMatrix a(3, 3);
    a.at(0, 0) = Rational(1);
    a.at(0, 1) = Rational(1);
    a.at(1, 1) = Rational(1);
    a.at(1, 2) = Rational(1);
    a.at(2, 2) = Rational(101, 100);
    const Spectrum s = spectrum(a, 128);
    REQUIRE(s.eigenvalues.size() == 2);
    CHECK(s.dimension == 3);

    const EigenvalueEnclosure& one = s.eigenvalues[0];
    CHECK(one.real_interval.is_point());
    CHECK(one.real_interval.lo == Rational(1));
    CHECK(one.index == 2);
    CHECK(one.alg_multiplicity == 2);

    const EigenvalueEnclosure& close = s.eigenvalues[1];
    CHECK(close.real_interval.is_point());
    CHECK(close.real_interval.lo == Rational(101, 100));
    CHECK(close.index == 1);
    CHECK(close.alg_multiplicity == 1);
}

TEST_CASE("zero and irrational real eigenvalues") {
    RatMatrix z(1, 1);
    z.at(0, 0) = Rational(0);
    const Spectrum sz = spectrum(z, 128);
    REQUIRE(sz.eigenvalues.size() == 1);
    CHECK(sz.eigenvalues[0].kind == EigenvalueKind::Zero);
    CHECK(sz.eigenvalues[0].real_interval.is_point());
    CHECK(real_part_sign(sz.eigenvalues[0]) == SignClass::Zero);

    // eigenvalues +-sqrt(2): tight non-point enclosures that exclude -1, 0, 1
    const Spectrum sq = spectrum(mat2(0, 2, 1, 0), 128);
    REQUIRE(sq.eigenvalues.size() == 2);
    const EigenvalueEnclosure& neg = sq.eigenvalues[0];
    const EigenvalueEnclosure& pos = sq.eigenvalues[1];
    CHECK(neg.kind == EigenvalueKind::NegativeReal);
    CHECK(pos.kind == EigenvalueKind::PositiveReal);
    for (const EigenvalueEnclosure* e : {&neg, &pos}) {
        CHECK_FALSE(e->real_interval.is_point());
        CHECK(e->real_interval.width() <= kWidthCap);
        CHECK_FALSE(e->real_interval.contains(Rational(0)));
        CHECK_FALSE(e->real_interval.contains(Rational(1)));
        CHECK_FALSE(e->real_interval.contains(Rational(-1)));
    }
    // the enclosures really do pin sqrt(2): square the bounds around 2
    CHECK(pos.real_interval.lo * pos.real_interval.lo <= Rational(2));
    CHECK(pos.real_interval.hi * pos.real_interval.hi >= Rational(2));
    CHECK(real_part_sign(neg) == SignClass::Negative);
    CHECK(real_part_sign(pos) == SignClass::Positive);
}

TEST_CASE("real root isolation") {
    // (x^2 - 2)(x - 1): roots -sqrt(2), 1, sqrt(2)
    const IntPolynomial p = IntPolynomial{-2, 0, 1} * IntPolynomial{-1, 1};
    const auto roots = isolate_real_roots(p, 128);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].interval.hi < 0);
    CHECK(roots[1].interval.is_point());
    CHECK(roots[1].interval.lo == Rational(1));
    CHECK(roots[2].interval.lo > Rational(1));
    for (const auto& r : roots) {
        CHECK(r.multiplicity == 1);
        CHECK(r.interval.width() <= kWidthCap);
        // sign change or exact vanishing across the interval
        if (r.interval.is_point())
            CHECK(p.sign_at(r.interval.lo) == 0);
        else
            CHECK(p.sign_at(r.interval.lo) * p.sign_at(r.interval.hi) < 0);
    }

    // repeated root: (x - 1/2)^2 cleared is 4x^2 - 4x + 1
    const auto rep = isolate_real_roots(IntPolynomial{1, -4, 4}, 64);
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].interval.is_point());
    CHECK(rep[0].interval.lo == Rational(1, 2));
    CHECK(rep[0].multiplicity == 2);
}

TEST_CASE("complex root isolation") {
    // x^2 + 1: the upper-half representative is exactly i
    const auto pair = isolate_complex_roots(IntPolynomial{1, 0, 1}, 128);
    REQUIRE(pair.size() == 1);
    CHECK(pair[0].real_interval.is_point());
    CHECK(pair[0].real_interval.lo == 0);
    CHECK(pair[0].imag_interval.is_point());
    CHECK(pair[0].imag_interval.lo == 1);
    CHECK(pair[0].multiplicity == 1);

    // x^2 + x + 1: real part exactly -1/2, imaginary part sqrt(3)/2
    const auto omega = isolate_complex_roots(IntPolynomial{1, 1, 1}, 128);
    REQUIRE(omega.size() == 1);
    CHECK(omega[0].real_interval.is_point());
    CHECK(omega[0].real_interval.lo == Rational(-1, 2));
    CHECK(omega[0].imag_interval.lo > 0);
    CHECK(omega[0].imag_interval.width() <= kWidthCap);
    // imag^2 brackets 3/4
    CHECK(omega[0].imag_interval.lo * omega[0].imag_interval.lo <= Rational(3, 4));
    CHECK(omega[0].imag_interval.hi * omega[0].imag_interval.hi >= Rational(3, 4));

    // a polynomial with no complex roots yields nothing
    CHECK(isolate_complex_roots(IntPolynomial{-2, 0, 1}, 64).empty());
}

TEST_CASE("mixed spectrum is sorted and disjoint with the right multiplicity totals") {
    // block diag(rotation, 3): one pair + one positive real
    RatMatrix a(3, 3);
    a.at(0, 1) = Rational(-1);
    a.at(1, 0) = Rational(1);
    a.at(2, 2) = Rational(3);
    const Spectrum s = spectrum(a, 96);
    REQUIRE(s.eigenvalues.size() == 2);
    std::size_t total = 0;
    bool has_pair = false, has_real3 = false;
    for (const auto& e : s.eigenvalues) {
        total += e.alg_multiplicity * (e.kind == EigenvalueKind::ComplexPair ? 2 : 1);
        if (e.kind == EigenvalueKind::ComplexPair) {
            has_pair = true;
            CHECK(e.real_interval.lo == 0);
            CHECK(e.imag_interval.lo == 1);
        }
        if (e.kind == EigenvalueKind::PositiveReal) {
            has_real3 = true;
            CHECK(e.real_interval.lo == Rational(3));
        }
    }
    CHECK(total == 3);
    CHECK(has_pair);
    CHECK(has_real3);
}
