#include <genmat/builtins.hpp>
#include <genmat/errors.hpp>
#include <genmat/parser.hpp>
#include <genmat/rng.hpp>

#include "doctest.h"

using namespace genmat;

namespace {

TracePolynomial x(int m, int i) { return TracePolynomial::variable(m, i); }

std::size_t position_of(const char* text, int m) {
    try {
        parse_expression(text, m);
    } catch (const ParseError& e) {
        return e.position();
    }
    const std::string msg = std::string("expected a parse error for: ") + text;
    FAIL(msg);
    return 0;
}

}  // namespace

TEST_CASE("grammar basics") {
    CHECK(parse_expression("X1*X2 - X2*X1", 2) ==
          x(2, 1) * x(2, 2) - x(2, 2) * x(2, 1));
    CHECK(parse_expression("[X1,X2]", 2) ==
          x(2, 1) * x(2, 2) - x(2, 2) * x(2, 1));
    CHECK(parse_expression("([X1,X2])^2", 2) == commutator_square());
    CHECK(parse_expression("(X1+X2)*(X1-X2)", 2) ==
          x(2, 1) * x(2, 1) - x(2, 1) * x(2, 2) + x(2, 2) * x(2, 1) -
              x(2, 2) * x(2, 2));
    CHECK(parse_expression("-X1 + 2", 1) ==
          TracePolynomial::constant(1, Rational(2)) - x(1, 1));
    CHECK(parse_expression("3/2*tr(X1)*X1", 1) ==
          trace_of(x(1, 1)).scaled(Rational(3) / 2) * x(1, 1));
    CHECK(parse_expression("tr(X1*X2)*X1 - 1/2*X2^3", 2) ==
          trace_of(x(2, 1) * x(2, 2)) * x(2, 1) -
              x(2, 2).pow(3).scaled(Rational(1) / 2));
}

TEST_CASE("whitespace is free, multiplication is explicit") {
    CHECK(parse_expression("  X1 \t* X2 ", 2) == parse_expression("X1*X2", 2));
    CHECK_THROWS_AS(parse_expression("X1 X2", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("2X1", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("tr X1", 2), ParseError);
}

TEST_CASE("powers bind to the factor") {
    CHECK(parse_expression("X1^3", 1) == x(1, 1).pow(3));
    CHECK(parse_expression("tr(X1)^2", 1) == trace_of(x(1, 1)).pow(2));
    CHECK(parse_expression("tr(X1^2)", 1) == trace_of(x(1, 1) * x(1, 1)));
    CHECK_THROWS_AS(parse_expression("X1^-1", 1), ParseError);
    CHECK_THROWS_AS(parse_expression("X1^65", 1), ParseError);
}

TEST_CASE("det needs n and expands exactly") {
    CHECK_THROWS_AS(parse_expression("det(X1)", 1), ParseError);
    CHECK(parse_expression("det(X1)", 1, 2) == det_of(x(1, 1), 2));
    CHECK(parse_expression("det(X1*X2 - X2*X1)", 2, 2) ==
          det_of(x(2, 1) * x(2, 2) - x(2, 2) * x(2, 1), 2));
}

TEST_CASE("tr of an expression with a constant part needs n") {
    CHECK_THROWS_AS(parse_expression("tr(1 + X1)", 1), ParseError);
    CHECK(parse_expression("tr(1 + X1)", 1, 2) ==
          trace_of(TracePolynomial::constant(1, Rational(1)) + x(1, 1), 2));
}

TEST_CASE("unknown names and out-of-range generators") {
    CHECK_THROWS_AS(parse_expression("X3", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("X0", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("foo(X1)", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("X1 +", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("(X1", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("[X1 X2]", 2), ParseError);
}

TEST_CASE("error positions point at the offending byte") {
    CHECK(position_of("X9", 2) == 0);
    CHECK(position_of("X1 + X9", 2) == 5);
    CHECK(position_of("X1 * (X2 + )", 2) == 11);
}

TEST_CASE("printed form reparses to the same element") {
    Rng rng(401);
    std::vector<TracePolynomial> corpus = {
        commutator_square(),
        friedland_invariant(),
        standard_identity(4),
        formanek(2),
        parse_expression("tr(X1*X2)*X1 - 1/2*X2^3 + det(X1)", 2, 2),
        parse_expression("-2/3 + tr(X1)*tr(X2*X1)*X2", 2),
        TracePolynomial(2),  // zero
    };
    for (const auto& p : corpus) {
        const auto back = parse_expression(p.to_string(), p.generators(), 2);
        CHECK(back == p);
    }
}
