#include <genmat/errors.hpp>
#include <genmat/rational.hpp>

#include "doctest.h"

using namespace genmat;

TEST_CASE("rationals canonicalize on parse") {
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-4/6")) == "-2/3");
    CHECK(to_string(parse_rational("0/17")) == "0");
    CHECK(to_string(parse_rational("42")) == "42");
    CHECK(to_string(parse_rational("+42")) == "42");
    CHECK(parse_rational("1/2") + parse_rational("1/3") == Rational(5) / 6);
}

TEST_CASE("rational parse rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("/2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1 /2"), ParseError);
    // the sign always lives on the numerator
    CHECK_THROWS_AS(parse_rational("4/-6"), ParseError);
}

TEST_CASE("to_string round-trips through parse_rational") {
    for (long p = -7; p <= 7; ++p)
        for (long q = 1; q <= 5; ++q) {
            const Rational r = Rational(p) / q;
            CHECK(parse_rational(to_string(r)) == r);
        }
}

TEST_CASE("huge values stay exact") {
    Rational r(1);
    for (int i = 0; i < 40; ++i) r *= Rational(10);
    r += Rational(1) / 3;
    // (3*10^40 + 1)/3
    const std::string expected = "3" + std::string(39, '0') + "1/3";
    CHECK(to_string(r) == expected);
    CHECK(parse_rational(expected) == r);
}
