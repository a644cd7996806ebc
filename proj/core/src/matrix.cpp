#include "genmat/matrix.hpp"

#include <sstream>
#include <utility>

#include "genmat/errors.hpp"

namespace genmat {

namespace {

void require_same_side(const Matrix& a, const Matrix& b) {
    if (a.side() != b.side())
        throw PreconditionError("matrix dimension mismatch: " + std::to_string(a.side()) +
                                " vs " + std::to_string(b.side()));
}

}  // namespace

Matrix::Matrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
    if (n <= 0) throw PreconditionError("matrix side must be positive");
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& entries) {
    Matrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.n_; ++i) m.at(i, i) = entries[static_cast<std::size_t>(i)];
    return m;
}

Matrix Matrix::unit(int n, int i, int j) {
    Matrix m(n);
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw PreconditionError("matrix unit index out of range");
    m.at(i, j) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.n_)
            throw PreconditionError("matrix rows must form a square array");
        for (int j = 0; j < m.n_; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_side(*this, rhs);
    Matrix out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] + rhs.entries_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_side(*this, rhs);
    Matrix out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] - rhs.entries_[k];
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_side(*this, rhs);
    Matrix out(n_);
    for (int i = 0; i < n_; ++i) {
        for (int l = 0; l < n_; ++l) {
            const Rational& x = at(i, l);
            if (x == 0) continue;
            for (int j = 0; j < n_; ++j) {
                if (rhs.at(l, j) == 0) continue;
                out.at(i, j) += x * rhs.at(l, j);
            }
        }
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = c * entries_[k];
    return out;
}

Rational Matrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool Matrix::is_scalar() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j ? at(i, j) != 0 : at(i, j) != at(0, 0)) return false;
    return true;
}

std::vector<Rational> Matrix::char_poly_coeffs() const {
    // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i,
    // with p_i = tr(a^i) and e_0 = 1.
    std::vector<Rational> p(static_cast<std::size_t>(n_) + 1);
    std::vector<Rational> e(static_cast<std::size_t>(n_) + 1);
    e[0] = 1;
    Matrix power = identity(n_);
    for (int i = 1; i <= n_; ++i) {
        power = power * *this;
        p[static_cast<std::size_t>(i)] = power.trace();
    }
    for (int k = 1; k <= n_; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) {
            Rational term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
            if (i % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        e[static_cast<std::size_t>(k)] = acc / k;
    }
    return {e.begin() + 1, e.end()};
}

Rational Matrix::det() const {
    Matrix work = *this;
    Rational result = 1;
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int row = col; row < n_; ++row) {
            if (work.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            result = -result;
        }
        result *= work.at(col, col);
        for (int row = col + 1; row < n_; ++row) {
            if (work.at(row, col) == 0) continue;
            Rational factor = work.at(row, col) / work.at(col, col);
            for (int j = col; j < n_; ++j) work.at(row, j) -= factor * work.at(col, j);
        }
    }
    return result;
}

std::optional<Matrix> Matrix::inverse() const {
    Matrix work = *this;
    Matrix inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int row = col; row < n_; ++row) {
            if (work.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Rational d = work.at(col, col);
        for (int j = 0; j < n_; ++j) {
            work.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int row = 0; row < n_; ++row) {
            if (row == col || work.at(row, col) == 0) continue;
            Rational factor = work.at(row, col);
            for (int j = 0; j < n_; ++j) {
                work.at(row, j) -= factor * work.at(col, j);
                inv.at(row, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < n_; ++i) {
        out << (i ? ", [" : "[");
        for (int j = 0; j < n_; ++j) out << (j ? ", " : "") << genmat::to_string(at(i, j));
        out << "]";
    }
    out << "]";
    return out.str();
}

MatrixTuple::MatrixTuple(std::vector<Matrix> ms) : matrices(std::move(ms)) {
    if (matrices.empty()) throw PreconditionError("matrix tuple must have at least one member");
    for (const auto& m : matrices)
        if (m.side() != matrices.front().side())
            throw PreconditionError("matrix tuple members must share one side length");
}

MatrixTuple conjugated(const MatrixTuple& a, const Matrix& g) {
    auto ginv = g.inverse();
    if (!ginv) throw PreconditionError("conjugating matrix is singular");
    std::vector<Matrix> out;
    out.reserve(a.matrices.size());
    for (const auto& m : a.matrices) out.push_back(g * m * *ginv);
    return MatrixTuple(std::move(out));
}

}  // namespace genmat
