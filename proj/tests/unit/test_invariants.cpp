#include <genmat/builtins.hpp>
#include <genmat/errors.hpp>
#include <genmat/evaluate.hpp>
#include <genmat/invariants.hpp>

#include "doctest.h"
#include "test_support.hpp"

using namespace genmat;
using test::mat;

TEST_CASE("fingerprint of the standard pair is frozen") {
    const Fingerprint fp = fingerprint(test::e12_e21(), 2);
    CHECK(fp.to_text() == "n=2 m=2 maxLen=2\n1=0\n2=0\n11=0\n12=1\n22=0\n");
    REQUIRE(fp.values.size() == 5);
    CHECK(fp.values[3].first == Word{1, 2});
    CHECK(fp.values[3].second == 1);
}

TEST_CASE("fingerprints are conjugation invariant") {
    Rng rng(601);
    for (int n = 2; n <= 3; ++n) {
        const MatrixTuple a = test::generating_tuple(rng, 2, n);
        const Matrix g = rng.unimodular(n, 8, 3);
        CHECK(fingerprint(a, n * n) == fingerprint(conjugated(a, g), n * n));
    }
}

TEST_CASE("separation by fingerprint is sound") {
    CHECK(separated_by_fingerprint(test::e12_e21(), test::e12_e21_plus_e12(), 2) ==
          Separation::Distinct);
    CHECK(separated_by_fingerprint(test::e12_e21(), test::e12_e21(), 4) ==
          Separation::Indistinguishable);
    Rng rng(602);
    const MatrixTuple a = test::generating_tuple(rng, 2, 2);
    CHECK(separated_by_fingerprint(a, conjugated(a, rng.unimodular(2, 6, 3)), 4) ==
          Separation::Indistinguishable);
}

TEST_CASE("friedland agrees with its trace-polynomial form and examples") {
    CHECK(friedland(test::e12_e21()) == -4);
    CHECK(friedland(MatrixTuple({mat({{1, 0}, {0, 2}}), mat({{3, 0}, {0, 4}})})) == 0);
    CHECK(friedland(MatrixTuple({Matrix::identity(2), Matrix::identity(2)})) == 0);
    CHECK_THROWS_AS(friedland(MatrixTuple({Matrix::identity(3), Matrix::identity(3)})),
                    PreconditionError);

    Rng rng(603);
    for (int i = 0; i < 25; ++i) {
        const MatrixTuple a = rng.tuple(2, 2, -5, 5);
        CHECK(friedland(a) == evaluate(friedland_invariant(), a).scalar.value());
    }
}

TEST_CASE("friedland is nonzero exactly on generating pairs") {
    Rng rng(604);
    for (int i = 0; i < 100; ++i) {
        const MatrixTuple a = rng.tuple(2, 2, -5, 5);
        CHECK((friedland(a) != 0) == generates(a));
    }
}

TEST_CASE("fingerprint validates max_len") {
    CHECK_THROWS_AS(fingerprint(test::e12_e21(), 0), PreconditionError);
}
