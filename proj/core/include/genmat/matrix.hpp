#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genmat/rational.hpp"

namespace genmat {

/// Dense square matrix over Rational. Sides are tiny here (n <= 4 in
/// practice), so there is no sparse storage and no factorization cache.
class Matrix {
public:
    explicit Matrix(int n);  // zero matrix
    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<Rational>& entries);
    /// Matrix unit E_{ij} (0-based indices).
    static Matrix unit(int n, int i, int j);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int side() const { return n_; }

    Rational& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& c) const;
    bool operator==(const Matrix& rhs) const = default;

    Rational trace() const;
    bool is_zero() const;
    /// True iff this is c*I for some c (including c = 0).
    bool is_scalar() const;

    /// Coefficients (e_1, ..., e_n) of t^n - e_1 t^{n-1} + ... + (-1)^n e_n,
    /// computed from the power sums tr(a^k) via Newton's identities.
    /// e_n is det(a).
    std::vector<Rational> char_poly_coeffs() const;

    /// Determinant by exact Gaussian elimination. Kept as a route
    /// independent of char_poly_coeffs so the two can be cross-checked.
    Rational det() const;

    std::optional<Matrix> inverse() const;

    /// Row-major entries, for use as a vector in k^{n^2}.
    const std::vector<Rational>& flat() const { return entries_; }

    std::string to_string() const;

private:
    int n_;
    std::vector<Rational> entries_;  // row-major
};

/// An m-tuple of n x n matrices; the points the rest of the library
/// evaluates at. All members share the same side length.
struct MatrixTuple {
    std::vector<Matrix> matrices;

    MatrixTuple() = default;
    explicit MatrixTuple(std::vector<Matrix> ms);

    int side() const { return matrices.empty() ? 0 : matrices.front().side(); }
    int arity() const { return static_cast<int>(matrices.size()); }
    const Matrix& operator[](int i) const { return matrices[static_cast<std::size_t>(i)]; }
    bool operator==(const MatrixTuple& rhs) const = default;
};

/// g a g^{-1}, applied entrywise to the tuple. Throws if g is singular.
MatrixTuple conjugated(const MatrixTuple& a, const Matrix& g);

}  // namespace genmat
