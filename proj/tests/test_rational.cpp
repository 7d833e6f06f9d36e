#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <specinf/errors.hpp>
#include <specinf/rational.hpp>

using namespace specinf;

TEST_CASE("to_string canonical forms") {
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(rational(3)) == "3");
    CHECK(to_string(rational(-3)) == "-3");
    CHECK(to_string(rational(1, 2)) == "1/2");
    CHECK(to_string(rational(-1, 2)) == "-1/2");
    CHECK(to_string(rational(2, 4)) == "1/2");   // reduced
    CHECK(to_string(rational(1, -2)) == "-1/2"); // sign normalized
    CHECK(to_string(rational(6, 3)) == "2");
}

TEST_CASE("parse_rational round trip") {
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("5") == rational(5));
    CHECK(parse_rational("-7") == rational(-7));
    CHECK(parse_rational("3/4") == rational(3, 4));
    CHECK(parse_rational("-3/4") == rational(-3, 4));
    CHECK(parse_rational("4/6") == rational(2, 3));
    for (long n = -10; n <= 10; ++n)
        for (long d = 1; d <= 7; ++d) {
            Rational r = rational(n, d);
            CHECK(parse_rational(to_string(r)) == r);
        }
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), SyntaxError);
    CHECK_THROWS_AS(parse_rational("a"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("1/"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("/2"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("1.5"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("1 /2"), SyntaxError);
}

TEST_CASE("floor, ceil, fractional part") {
    CHECK(floor_long(rational(7, 2)) == 3);
    CHECK(floor_long(rational(-7, 2)) == -4);
    CHECK(floor_long(rational(4)) == 4);
    CHECK(ceil_long(rational(7, 2)) == 4);
    CHECK(ceil_long(rational(-7, 2)) == -3);
    CHECK(ceil_long(rational(4)) == 4);
    CHECK(frac_part(rational(7, 2)) == rational(1, 2));
    CHECK(frac_part(rational(-7, 2)) == rational(1, 2));
    CHECK(frac_part(rational(-1, 3)) == rational(2, 3));
    CHECK(frac_part(rational(5)) == Rational(0));
    // x = floor(x) + frac(x)
    for (long n = -9; n <= 9; ++n)
        for (long d = 1; d <= 5; ++d) {
            Rational r = rational(n, d);
            CHECK(Rational(floor_long(r)) + frac_part(r) == r);
            CHECK(ceil_long(r) - floor_long(r) == (frac_part(r) == 0 ? 0 : 1));
        }
}

TEST_CASE("exact arithmetic sanity") {
    CHECK(rational(1, 3) + rational(1, 6) == rational(1, 2));
    CHECK(rational(1, 10) * rational(10) == Rational(1));
    Rational s(0);
    for (int i = 0; i < 100; ++i) s += rational(1, 100);
    CHECK(s == Rational(1));
}
