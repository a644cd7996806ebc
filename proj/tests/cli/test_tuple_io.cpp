#include "tuple_io.hpp"

#include <genmat/errors.hpp>

#include "doctest.h"
#include "test_support.hpp"

using namespace genmat;
using namespace genmat::cli;

TEST_CASE("tuple files round-trip through the canonical form") {
    const Json j = Json::parse(R"({
        "n": 2, "m": 2,
        "matrices": [[[0, 1], [0, 0]], [["0", "0"], ["1/1", 0]]]
    })");
    const MatrixTuple a = tuple_from_json(j);
    CHECK(a == test::e12_e21());

    const Json canonical = tuple_to_json(a);
    CHECK(canonical["n"] == 2);
    CHECK(canonical["m"] == 2);
    CHECK(canonical["matrices"][1][1][0] == "1");
    // Canonical output is a fixed point.
    CHECK(tuple_to_json(tuple_from_json(canonical)) == canonical);
}

TEST_CASE("scalars accept integers and quotient strings only") {
    CHECK(scalar_from_json(Json(-3)) == -3);
    CHECK(scalar_from_json(Json("4/6")) == Rational(2) / 3);
    CHECK_THROWS_AS(scalar_from_json(Json(1.5)), FileError);
    CHECK_THROWS_AS(scalar_from_json(Json(true)), FileError);
    CHECK_THROWS_AS(scalar_from_json(Json("1/0")), ParseError);
}

TEST_CASE("malformed tuple files are rejected") {
    CHECK_THROWS_AS(tuple_from_json(Json::parse(R"({"m": 2})")), FileError);
    CHECK_THROWS_AS(
        tuple_from_json(Json::parse(R"({"n": 2, "m": 2, "matrices": []})")),
        FileError);
    CHECK_THROWS_AS(
        tuple_from_json(Json::parse(
            R"({"n": 2, "m": 1, "matrices": [[[1, 0], [0]]]})")),
        FileError);
    CHECK_THROWS_AS(
        tuple_from_json(Json::parse(R"({"n": 0, "m": 1, "matrices": []})")),
        FileError);
}

TEST_CASE("tuple lists accept plain tuple files and real lists") {
    const TupleList single = tuple_list_from_json(Json::parse(R"({
        "n": 2, "m": 2,
        "matrices": [[[0, 1], [0, 0]], [[0, 0], [1, 0]]]
    })"));
    CHECK(single.n == 2);
    CHECK(single.tuples.size() == 1);

    const TupleList many = tuple_list_from_json(Json::parse(R"({
        "n": 2, "m": 2,
        "tuples": [
            [[[0, 1], [0, 0]], [[0, 0], [1, 0]]],
            [[[0, 1], [0, 0]], [[0, 1], [1, 0]]]
        ]
    })"));
    CHECK(many.tuples.size() == 2);
    CHECK(many.tuples[0] == test::e12_e21());
    CHECK(many.tuples[1] == test::e12_e21_plus_e12());

    const TupleList empty = tuple_list_from_json(
        Json::parse(R"({"n": 2, "m": 2, "tuples": []})"));
    CHECK(empty.tuples.empty());
    CHECK(empty.m == 2);
}

TEST_CASE("missing files raise FileError") {
    CHECK_THROWS_AS(read_json_file("/nonexistent/nowhere.json"), FileError);
}
