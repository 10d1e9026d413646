#include "polyescape/polynomial.hpp"

#include "doctest.h"

#include <random>

using namespace polyescape;

namespace {

// The triangular matrix with a size-2 Jordan block at 1 and a simple
// eigenvalue at 101/100.
RatMatrix block_matrix() {
    return RatMatrix{{Rational(1), Rational(1), Rational(0)},
                     {Rational(0), Rational(1), Rational(1)},
                     {Rational(0), Rational(0), Rational(101, 100)}};
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t d, long magnitude, long denominator) {
    RatMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const long num = static_cast<long>(rng() % (2 * magnitude + 1)) - magnitude;
            m.at(i, j) = Rational(num, denominator);
        }
    return m;
}

}  // namespace

TEST_CASE("IntPolynomial basics") {
    const IntPolynomial p{Integer(-2), Integer(0), Integer(1)};  // x^2 - 2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(2)) == 2);
    CHECK(p.sign_at(Rational(1)) == -1);
    CHECK(p.sign_at(Rational(3, 2)) > 0);
    CHECK(p.derivative() == IntPolynomial{Integer(0), Integer(2)});
    CHECK(p.content() == 1);
    CHECK((p * p).degree() == 4);
    CHECK((p + p) == IntPolynomial{Integer(-4), Integer(0), Integer(2)});
    CHECK((p - p).is_zero());

    const IntPolynomial scaled{Integer(4), Integer(-8)};
    CHECK(scaled.content() == 4);
    CHECK(scaled.primitive_part() == IntPolynomial{Integer(-1), Integer(2)});
}

TEST_CASE("rational polynomial division and gcd") {
    using namespace ratpoly;
    const Poly num{Rational(-1), Rational(0), Rational(1)};  // x^2 - 1
    const Poly den{Rational(-1), Rational(1)};               // x - 1
    Poly rem;
    const Poly q = divmod(num, den, rem);
    CHECK(is_zero(rem));
    CHECK(q == Poly{Rational(1), Rational(1)});
    CHECK(div_exact(num, den) == q);
    CHECK_THROWS_AS(div_exact(Poly{Rational(1), Rational(0), Rational(1)}, den),
                    std::logic_error);

    const Poly g = gcd_monic(num, Poly{Rational(1), Rational(-2), Rational(1)});  // (x-1)^2
    CHECK(g == Poly{Rational(-1), Rational(1)});  // monic x - 1
}

TEST_CASE("char_poly of the Jordan-block example is exact") {
    const ScaledPolynomial cp = char_poly(block_matrix());
    // (x-1)^2 (x - 101/100) cleared: 100x^3 - 301x^2 + 302x - 101.
    CHECK(cp.cleared ==
          IntPolynomial{Integer(-101), Integer(302), Integer(-301), Integer(100)});
    CHECK(cp.scale == 100);
    // monic form evaluates to zero at both eigenvalues
    CHECK(cp.cleared.eval(Rational(1)) == 0);
    CHECK(cp.cleared.eval(Rational(101, 100)) == 0);
}

TEST_CASE("min_poly matches the Jordan structure") {
    SUBCASE("block matrix keeps full degree") {
        const ScaledPolynomial mp = min_poly(block_matrix());
        CHECK(mp.cleared.degree() == 3);  // index 2 at 1, index 1 at 101/100
        CHECK(eval(mp.cleared, block_matrix()).is_zero());
    }
    SUBCASE("diagonal matrix drops repeated factors") {
        RatMatrix diag(3, 3);
        diag.at(0, 0) = 1;
        diag.at(1, 1) = 1;
        diag.at(2, 2) = Rational(101, 100);
        const ScaledPolynomial mp = min_poly(diag);
        CHECK(mp.cleared.degree() == 2);  // (x-1)(100x-101)
        CHECK(mp.cleared == IntPolynomial{Integer(101), Integer(-201), Integer(100)});
    }
}

TEST_CASE("squarefree decomposition splits multiplicities") {
    // (x-1)^2 (100x - 101)
    const IntPolynomial p = IntPolynomial{Integer(1), Integer(-2), Integer(1)} *
                            IntPolynomial{Integer(-101), Integer(100)};
    const auto factors = squarefree_decomposition(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].second == 1);
    CHECK(factors[0].first == IntPolynomial{Integer(-101), Integer(100)});
    CHECK(factors[1].second == 2);
    CHECK(factors[1].first == IntPolynomial{Integer(-1), Integer(1)});
}

TEST_CASE("poly_gcd and divisibility") {
    const IntPolynomial a{Integer(-1), Integer(0), Integer(1)};   // x^2-1
    const IntPolynomial b{Integer(1), Integer(-2), Integer(1)};   // (x-1)^2
    CHECK(poly_gcd(a, b) == IntPolynomial{Integer(-1), Integer(1)});
    CHECK(poly_divides(IntPolynomial{Integer(-1), Integer(1)}, a));
    CHECK_FALSE(poly_divides(b, a));
}

TEST_CASE("Cayley-Hamilton and minimal-poly divisibility on random matrices") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t d = 2 + trial % 3;
        const RatMatrix a = random_matrix(rng, d, 6, 1 + static_cast<long>(trial % 4));
        const ScaledPolynomial cp = char_poly(a);
        const ScaledPolynomial mp = min_poly(a);
        CHECK(eval(cp.cleared, a).is_zero());
        CHECK(eval(mp.cleared, a).is_zero());
        CHECK(poly_divides(mp.cleared, cp.cleared));
    }
}

TEST_CASE("from_ratpoly_cleared normalizes to primitive positive leading") {
    ratpoly::Poly p{Rational(-1, 2), Rational(0), Rational(-3, 2)};
    const IntPolynomial cleared = IntPolynomial::from_ratpoly_cleared(p);
    CHECK(cleared == IntPolynomial{Integer(1), Integer(0), Integer(3)});
}
