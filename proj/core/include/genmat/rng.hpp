#pragma once

#include <cstdint>
#include <random>

#include "genmat/matrix.hpp"

namespace genmat {

// Deterministic seeded source. Integer draws use explicit rejection sampling
// so streams are identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    Matrix matrix(int n, std::int64_t lo, std::int64_t hi);
    MatrixTuple tuple(int m, int n, std::int64_t lo, std::int64_t hi);

    // Product of `shears` elementary transvections I + c*E_ij; determinant 1.
    Matrix unimodular(int n, int shears, std::int64_t c_bound);

private:
    std::mt19937_64 engine_;
};

}  // namespace genmat
