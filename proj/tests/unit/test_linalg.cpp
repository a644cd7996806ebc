#include <genmat/errors.hpp>
#include <genmat/linalg.hpp>
#include <genmat/rng.hpp>

#include "doctest.h"

using namespace genmat;

namespace {

std::vector<RowVec> random_rows(Rng& rng, int r, int c) {
    std::vector<RowVec> rows(static_cast<std::size_t>(r), RowVec(static_cast<std::size_t>(c)));
    for (auto& row : rows)
        for (auto& x : row) x = Rational(rng.uniform(-5, 5));
    return rows;
}

RowVec mat_vec(const std::vector<RowVec>& rows, const RowVec& v) {
    RowVec out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += rows[r][c] * v[c];
    return out;
}

bool all_zero(const RowVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("rref on a known system") {
    std::vector<RowVec> rows = {
        {Rational(0), Rational(2), Rational(4)},
        {Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(3), Rational(5)},
    };
    RrefResult r = rref(rows);
    REQUIRE(r.pivot_cols == std::vector<int>{0, 1});
    CHECK(r.rows[0] == RowVec{Rational(1), Rational(0), Rational(-1)});
    CHECK(r.rows[1] == RowVec{Rational(0), Rational(1), Rational(2)});
    CHECK(rank(rows) == 2);
}

TEST_CASE("rref is idempotent") {
    Rng rng(201);
    for (int trial = 0; trial < 25; ++trial) {
        auto rows = random_rows(rng, 5, 7);
        RrefResult once = rref(rows);
        RrefResult twice = rref(once.rows);
        CHECK(once.rows == twice.rows);
        CHECK(once.pivot_cols == twice.pivot_cols);
    }
}

TEST_CASE("kernel basis annihilates, spans, and is normalized") {
    Rng rng(202);
    for (int trial = 0; trial < 25; ++trial) {
        const int width = 6;
        auto rows = random_rows(rng, 4, width);
        auto kernel = kernel_basis(rows, width);

        // rank-nullity
        CHECK(static_cast<int>(kernel.size()) == width - rank(rows));

        SpanBuilder span(width);
        for (const auto& v : kernel) {
            CHECK(all_zero(mat_vec(rows, v)));
            for (const auto& x : v) {
                if (x == 0) continue;
                CHECK(x == 1);  // first nonzero coordinate
                break;
            }
            CHECK(span.insert(v));  // basis vectors are independent
        }
    }
}

TEST_CASE("kernel normalization rescales every coordinate") {
    // One row 2x - y = 0: kernel vector from free column y is (1/2, 1)
    // before scaling, so the leading coordinate forces a division by itself.
    std::vector<RowVec> rows = {{Rational(2), Rational(-1)}};
    auto kernel = kernel_basis(rows, 2);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0] == RowVec{Rational(1), Rational(2)});
}

TEST_CASE("solve_affine finds a pivot-supported solution or reports none") {
    std::vector<RowVec> rows = {
        {Rational(1), Rational(1), Rational(0)},
        {Rational(0), Rational(0), Rational(1)},
    };
    auto x = solve_affine(rows, {Rational(3), Rational(5)});
    REQUIRE(x.has_value());
    CHECK(*x == RowVec{Rational(3), Rational(0), Rational(5)});

    std::vector<RowVec> inconsistent = {
        {Rational(1), Rational(1)},
        {Rational(2), Rational(2)},
    };
    CHECK_FALSE(solve_affine(inconsistent, {Rational(1), Rational(3)}).has_value());
}

TEST_CASE("solve_affine solutions satisfy the system") {
    Rng rng(203);
    for (int trial = 0; trial < 25; ++trial) {
        auto rows = random_rows(rng, 4, 6);
        RowVec target(6);
        for (auto& x : target) x = Rational(rng.uniform(-3, 3));
        RowVec rhs = mat_vec(rows, target);  // consistent by construction
        auto x = solve_affine(rows, rhs);
        REQUIRE(x.has_value());
        CHECK(mat_vec(rows, *x) == rhs);
    }
}

TEST_CASE("span builder tracks rank incrementally") {
    Rng rng(204);
    for (int trial = 0; trial < 25; ++trial) {
        auto rows = random_rows(rng, 6, 5);
        SpanBuilder span(5);
        std::vector<RowVec> seen;
        for (const auto& row : rows) {
            seen.push_back(row);
            span.insert(row);
            CHECK(span.dim() == rank(seen));
        }
        for (const auto& row : rows) CHECK(span.contains(row));
        RowVec probe(5);
        for (auto& x : probe) x = Rational(rng.uniform(-5, 5));
        CHECK(span.contains(probe) == (rank(seen) == [&] {
                  seen.push_back(probe);
                  return rank(seen);
              }()));
    }
}

TEST_CASE("linalg validates shapes") {
    CHECK_THROWS_AS(rref({{Rational(1)}, {Rational(1), Rational(2)}}),
                    PreconditionError);
    CHECK_THROWS_AS(kernel_basis({{Rational(1)}}, 2), PreconditionError);
    CHECK_THROWS_AS(solve_affine({{Rational(1)}}, {}), PreconditionError);
    CHECK_THROWS_AS(SpanBuilder(0), PreconditionError);
}
