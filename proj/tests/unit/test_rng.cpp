#include <genmat/rng.hpp>

#include "doctest.h"

using namespace genmat;

TEST_CASE("equal seeds give equal streams, different seeds differ") {
    Rng a(7), b(7), c(8);
    bool all_equal = true;
    bool any_diff = false;
    for (int i = 0; i < 200; ++i) {
        const auto va = a.uniform(-1000, 1000);
        all_equal &= va == b.uniform(-1000, 1000);
        any_diff |= va != c.uniform(-1000, 1000);
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("uniform respects bounds and hits them") {
    Rng rng(9);
    bool saw_lo = false, saw_hi = false;
    for (int i = 0; i < 2000; ++i) {
        const auto v = rng.uniform(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
        saw_lo |= v == -3;
        saw_hi |= v == 3;
    }
    CHECK(saw_lo);
    CHECK(saw_hi);
    CHECK(rng.uniform(5, 5) == 5);
}

TEST_CASE("matrix and tuple draws are reproducible") {
    Rng a(11), b(11);
    CHECK(a.matrix(3, -5, 5) == b.matrix(3, -5, 5));
    CHECK(a.tuple(2, 2, -5, 5) == b.tuple(2, 2, -5, 5));
}

TEST_CASE("unimodular draws have determinant one") {
    Rng rng(12);
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < 10; ++i) CHECK(rng.unimodular(n, 6, 4).det() == 1);
}

TEST_CASE("the integer stream is pinned across platforms") {
    // mt19937_64 output plus our rejection fold; any change to the sampling
    // scheme shows up here before it silently breaks seeded experiments.
    Rng rng(20260814);
    std::vector<std::int64_t> draws;
    for (int i = 0; i < 8; ++i) draws.push_back(rng.uniform(-5, 5));
    CHECK(draws == std::vector<std::int64_t>{-3, 4, 5, 4, 1, 0, 5, 1});
}
