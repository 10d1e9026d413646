#include "polyescape/rational.hpp"

#include "doctest.h"

#include <random>

using namespace polyescape;

TEST_CASE("parse_rational accepts integers, fractions, and decimals") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational(" 42 ") == Rational(42));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));  // canonicalized
    CHECK(parse_rational("1.01") == Rational(101, 100));
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
    CHECK(parse_rational("3.") == Rational(3));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("  "), ParseError);
    CHECK_THROWS_AS(parse_rational("-"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1e5"), ParseError);
    CHECK_THROWS_AS(parse_rational("."), ParseError);
}

TEST_CASE("to_string is canonical and round-trips") {
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(0)) == "0");

    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        const long long num = static_cast<long long>(rng() % 2000001) - 1000000;
        const long long den = static_cast<long long>(rng() % 1000000) + 1;
        const Rational q(num, den);
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("bit_size counts numerator and denominator bits") {
    CHECK(bit_size(Integer(0)) == 1);
    CHECK(bit_size(Integer(1)) == 1);
    CHECK(bit_size(Integer(-1)) == 1);
    CHECK(bit_size(Integer(2)) == 2);
    CHECK(bit_size(Integer(7)) == 3);
    CHECK(bit_size(Integer(8)) == 4);
    CHECK(bit_size(Integer(101)) == 7);

    CHECK(bit_size(Rational(1)) == 2);        // 1 bit + 1 bit
    CHECK(bit_size(Rational(0)) == 2);        // 0/1
    CHECK(bit_size(Rational(1, 8)) == 5);     // 1 + 4
    CHECK(bit_size(Rational(101, 100)) == 14);  // 7 + 7
    CHECK(bit_size(Rational(-101, 100)) == 14);
}

TEST_CASE("decimal rendering is exact where possible and deterministic") {
    CHECK(to_decimal_string(Rational(0)) == "0");
    CHECK(to_decimal_string(Rational(1, 8)) == "0.125");
    CHECK(to_decimal_string(Rational(51200)) == "51200");
    CHECK(to_decimal_string(Rational(1, 3)).substr(0, 7) == "0.33333");
    CHECK(to_decimal_string(Rational(1, 3)) == to_decimal_string(Rational(1, 3)));
    CHECK(to_decimal_string(Rational(-1, 8)) == "-0.125");
}

TEST_CASE("dyadic detection, floor/ceil, and powers") {
    CHECK(is_dyadic(Rational(3, 8)));
    CHECK(is_dyadic(Rational(5)));
    CHECK_FALSE(is_dyadic(Rational(1, 3)));

    CHECK(floor_int(Rational(7, 2)) == 3);
    CHECK(ceil_int(Rational(7, 2)) == 4);
    CHECK(floor_int(Rational(-7, 2)) == -4);
    CHECK(ceil_int(Rational(-7, 2)) == -3);
    CHECK(floor_int(Rational(6)) == 6);
    CHECK(ceil_int(Rational(6)) == 6);

    CHECK(pow2(0) == Rational(1));
    CHECK(pow2(10) == Rational(1024));
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(pow_rational(Rational(3, 2), 4) == Rational(81, 16));
    CHECK(pow_rational(Rational(5), 0) == Rational(1));
}

TEST_CASE("perfect squares are detected exactly") {
    Integer root;
    CHECK(perfect_square(Integer(0), root));
    CHECK(root == 0);
    CHECK(perfect_square(Integer(144), root));
    CHECK(root == 12);
    CHECK_FALSE(perfect_square(Integer(145), root));
    Integer big = Integer(1) << 200;
    CHECK(perfect_square(big, root));
    CHECK(root == Integer(1) << 100);
}

TEST_CASE("abs is exact") {
    CHECK(abs(Rational(-3, 7)) == Rational(3, 7));
    CHECK(abs(Rational(3, 7)) == Rational(3, 7));
    CHECK(abs(Rational(0)) == Rational(0));
}
