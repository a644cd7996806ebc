#include <genmat/errors.hpp>
#include <genmat/matrix.hpp>
#include <genmat/rng.hpp>

#include "doctest.h"
#include "test_support.hpp"

using namespace genmat;
using test::mat;

TEST_CASE("matrix arithmetic basics") {
    const Matrix a = mat({{1, 2}, {3, 4}});
    const Matrix b = mat({{0, 1}, {1, 0}});
    CHECK(a + b == mat({{1, 3}, {4, 4}}));
    CHECK(a - a == Matrix(2));
    CHECK(a * b == mat({{2, 1}, {4, 3}}));
    CHECK(b * a == mat({{3, 4}, {1, 2}}));
    CHECK(-a == a.scaled(Rational(-1)));
    CHECK(a.trace() == 5);
    CHECK(Matrix::identity(3).trace() == 3);
    CHECK(Matrix::unit(2, 0, 1) * Matrix::unit(2, 1, 0) == Matrix::unit(2, 0, 0));
}

TEST_CASE("scalar detection includes zero and excludes non-scalars") {
    CHECK(Matrix(3).is_zero());
    CHECK(Matrix(3).is_scalar());
    CHECK(Matrix::identity(3).scaled(Rational(-7) / 2).is_scalar());
    CHECK_FALSE(Matrix::diagonal({Rational(1), Rational(2)}).is_scalar());
    CHECK_FALSE(Matrix::unit(2, 0, 1).is_scalar());
}

TEST_CASE("shape mismatches are rejected") {
    CHECK_THROWS_AS(mat({{1, 2}}) , PreconditionError);
    CHECK_THROWS_AS(mat({{1}, {2, 3}}), PreconditionError);
    CHECK_THROWS_AS(Matrix(2) + Matrix(3), PreconditionError);
    CHECK_THROWS_AS(Matrix(2) * Matrix(3), PreconditionError);
}

TEST_CASE("characteristic polynomial of a known diagonal") {
    const Matrix d = Matrix::diagonal({Rational(1), Rational(2), Rational(3)});
    // t^3 - 6t^2 + 11t - 6
    const auto e = d.char_poly_coeffs();
    REQUIRE(e.size() == 3);
    CHECK(e[0] == 6);
    CHECK(e[1] == 11);
    CHECK(e[2] == 6);
}

TEST_CASE("determinant routes agree and multiply") {
    Rng rng(101); // fixed stream for this test
    for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i < 20; ++i) {
            const Matrix a = rng.matrix(n, -6, 6);
            const Matrix b = rng.matrix(n, -6, 6);
            CHECK(a.det() == a.char_poly_coeffs().back());
            CHECK((a * b).det() == a.det() * b.det());
        }
    }
}

TEST_CASE("Cayley-Hamilton holds on random matrices") {
    Rng rng(102);
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 10; ++i) {
            const Matrix a = rng.matrix(n, -5, 5);
            const auto e = a.char_poly_coeffs();
            Matrix acc = Matrix::identity(n);  // builds a^n - e1 a^{n-1} + ...
            for (int k = 0; k < n; ++k) acc = acc * a;
            Matrix power = Matrix::identity(n);
            std::vector<Matrix> powers{power};
            for (int k = 1; k < n; ++k) powers.push_back(powers.back() * a);
            Rational sign(-1);
            for (int k = 0; k < n; ++k) {
                acc = acc + powers[static_cast<std::size_t>(n - 1 - k)].scaled(sign * e[static_cast<std::size_t>(k)]);
                sign = -sign;
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("inverse is exact and detects singularity") {
    const Matrix a = mat({{1, 2}, {3, 4}});
    const auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv * a == Matrix::identity(2));
    CHECK(a * *inv == Matrix::identity(2));
    CHECK_FALSE(mat({{1, 2}, {2, 4}}).inverse().has_value());
    CHECK_FALSE(Matrix(3).inverse().has_value());

    Rng rng(103);
    for (int i = 0; i < 20; ++i) {
        const Matrix g = rng.unimodular(3, 8, 4);
        CHECK(g.det() == 1);
        const auto gi = g.inverse();
        REQUIRE(gi.has_value());
        CHECK(*gi * g == Matrix::identity(3));
    }
}

TEST_CASE("tuples validate their shape") {
    CHECK_THROWS_AS(MatrixTuple(std::vector<Matrix>{}), PreconditionError);
    CHECK_THROWS_AS(MatrixTuple({Matrix(2), Matrix(3)}), PreconditionError);
    const MatrixTuple a = test::e12_e21();
    CHECK(a.side() == 2);
    CHECK(a.arity() == 2);
}

TEST_CASE("conjugation is entrywise and rejects singular g") {
    const MatrixTuple a = test::e12_e21();
    const Matrix g = mat({{1, 1}, {0, 1}});
    const MatrixTuple b = conjugated(a, g);
    const auto gi = g.inverse();
    for (int i = 0; i < a.arity(); ++i) CHECK(b[i] == g * a[i] * *gi);
    CHECK_THROWS_AS(conjugated(a, mat({{1, 1}, {1, 1}})), PreconditionError);
}
