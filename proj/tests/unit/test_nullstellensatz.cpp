#include <genmat/errors.hpp>
#include <genmat/nullstellensatz.hpp>
#include <genmat/parser.hpp>

#include "doctest.h"
#include "test_support.hpp"

using namespace genmat;

TEST_CASE("degree-2 ideal of the standard orbit is the frozen basis") {
    const std::vector<MatrixTuple> points = {test::e12_e21()};
    const PointIdealBasis b = ideal_of_points(points, 2, 2);
    CHECK(b.degree_bound == 2);
    CHECK(b.ambient_dim == 7);
    CHECK(b.kernel_dim == 3);
    REQUIRE(b.basis.size() == 3);
    CHECK(b.basis[0] == parse_expression("X1^2", 2));
    CHECK(b.basis[1] == parse_expression("1 - X1*X2 - X2*X1", 2));
    CHECK(b.basis[2] == parse_expression("X2^2", 2));
    CHECK(b.representative == std::vector<int>{0});
}

TEST_CASE("ideal basis vanishes on every defining point and their conjugates") {
    Rng rng(701);
    std::vector<MatrixTuple> points = {test::e12_e21(),
                                       test::e12_e21_plus_e12()};
    const PointIdealBasis b = ideal_of_points(points, 2, 3);
    for (const auto& q : b.basis) {
        for (const auto& p : points) CHECK(evaluate(q, p).is_zero);
        CHECK(evaluate(q, conjugated(points[0], rng.unimodular(2, 6, 3))).is_zero);
    }
    CHECK(b.kernel_dim == static_cast<int>(b.basis.size()));
}

TEST_CASE("conjugate duplicates do not shrink the ideal") {
    Rng rng(702);
    std::vector<MatrixTuple> once = {test::e12_e21()};
    std::vector<MatrixTuple> twice = {
        test::e12_e21(), conjugated(test::e12_e21(), rng.unimodular(2, 6, 3))};
    const PointIdealBasis a = ideal_of_points(once, 2, 2);
    const PointIdealBasis b = ideal_of_points(twice, 2, 2);
    CHECK(a.basis == b.basis);
    CHECK(b.representative == std::vector<int>{0, 0});
}

TEST_CASE("the empty point set leaves the whole ambient space") {
    const PointIdealBasis b = ideal_of_points({}, 2, 1);
    CHECK(b.ambient_dim == 3);
    CHECK(b.kernel_dim == 3);
    CHECK(b.representative.empty());
}

TEST_CASE("separate finds the frozen witness at degree 2") {
    const std::vector<MatrixTuple> points = {test::e12_e21()};
    const SeparationOutcome out =
        separate(points, test::e12_e21_plus_e12(), 2, 2);
    REQUIRE(out.status == SeparationOutcome::Status::Separated);
    CHECK(out.degree_used <= 2);
    REQUIRE(out.witness.has_value());
    CHECK(evaluate(*out.witness, points[0]).is_zero);
    REQUIRE(out.target_value.has_value());
    CHECK_FALSE(out.target_value->is_zero);
}

TEST_CASE("separate recognizes conjugate targets and degree exhaustion") {
    Rng rng(703);
    const std::vector<MatrixTuple> points = {test::e12_e21()};
    const auto conj =
        separate(points, conjugated(points[0], rng.unimodular(2, 6, 3)), 3, 2);
    CHECK(conj.status == SeparationOutcome::Status::Conjugate);

    // At degree 1 the only constraints are linear; the ideal there is 0 for
    // this orbit, so no witness can exist yet.
    const auto exhausted = separate(points, test::e12_e21_plus_e12(), 1, 2);
    CHECK(exhausted.status == SeparationOutcome::Status::BoundExhausted);
    CHECK(exhausted.degree_used == 1);
}

TEST_CASE("experiment verdicts match exact conjugacy at degree 2") {
    Rng rng(704);
    const std::vector<MatrixTuple> points = {test::e12_e21()};
    std::vector<MatrixTuple> targets;
    for (int i = 0; i < 10; ++i)
        targets.push_back(test::generating_tuple(rng, 2, 2));
    targets.push_back(conjugated(points[0], rng.unimodular(2, 6, 3)));

    const ExperimentReport r =
        nullstellensatz_experiment(points, targets, 2, 2);
    CHECK(r.sound);
    REQUIRE(r.targets.size() == targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& v = r.targets[i];
        CHECK(v.member == conjugate_test(points[0], targets[i]).conjugate);
        CHECK(v.conjugate_to_point == v.member);
        CHECK(v.consistent);
        if (!v.member) REQUIRE(v.witness.has_value());
    }
}

TEST_CASE("experiment parallelism never changes the report") {
    Rng rng(705);
    const std::vector<MatrixTuple> points = {test::e12_e21()};
    std::vector<MatrixTuple> targets;
    for (int i = 0; i < 8; ++i) targets.push_back(test::generating_tuple(rng, 2, 2));

    const ExperimentReport serial =
        nullstellensatz_experiment(points, targets, 2, 2, 1);
    const ExperimentReport parallel =
        nullstellensatz_experiment(points, targets, 2, 2, 4);
    REQUIRE(serial.targets.size() == parallel.targets.size());
    for (std::size_t i = 0; i < serial.targets.size(); ++i) {
        CHECK(serial.targets[i].member == parallel.targets[i].member);
        CHECK(serial.targets[i].conjugate_to_point ==
              parallel.targets[i].conjugate_to_point);
        CHECK(serial.targets[i].witness == parallel.targets[i].witness);
    }
    CHECK(serial.basis.basis == parallel.basis.basis);
}

TEST_CASE("nullstellensatz preconditions") {
    CHECK_THROWS_AS(ideal_of_points({}, 0, 2), PreconditionError);
    CHECK_THROWS_AS(ideal_of_points({}, 2, -1), PreconditionError);
    CHECK_THROWS_AS(
        ideal_of_points({MatrixTuple({Matrix::identity(2), Matrix::identity(2)})},
                        2, 2),
        PreconditionError);
    CHECK_THROWS_AS(separate({test::e12_e21()}, test::e12_e21(), 0, 2),
                    PreconditionError);
    CHECK_THROWS_AS(
        nullstellensatz_experiment({test::e12_e21()},
                                   {MatrixTuple({Matrix::identity(2),
                                                 Matrix::identity(2)})},
                                   2, 2),
        PreconditionError);
}
