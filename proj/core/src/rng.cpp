#include "genmat/rng.hpp"

#include "genmat/errors.hpp"

namespace genmat {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw PreconditionError("empty sampling range");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
}

Matrix Rng::matrix(int n, std::int64_t lo, std::int64_t hi) {
    Matrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = uniform(lo, hi);
    return out;
}

MatrixTuple Rng::tuple(int m, int n, std::int64_t lo, std::int64_t hi) {
    std::vector<Matrix> ms;
    ms.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) ms.push_back(matrix(n, lo, hi));
    return MatrixTuple(std::move(ms));
}

Matrix Rng::unimodular(int n, int shears, std::int64_t c_bound) {
    Matrix g = Matrix::identity(n);
    for (int s = 0; s < shears; ++s) {
        const int i = static_cast<int>(uniform(0, n - 1));
        int j = static_cast<int>(uniform(0, n - 2));
        if (j >= i) ++j;
        const Rational c = uniform(-c_bound, c_bound);
        Matrix shear = Matrix::identity(n);
        shear.at(i, j) = c;
        g = g * shear;
    }
    return g;
}

}  // namespace genmat
