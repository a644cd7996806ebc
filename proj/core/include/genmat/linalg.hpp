#pragma once

#include <optional>
#include <vector>

#include "genmat/rational.hpp"

namespace genmat {

using RowVec = std::vector<Rational>;

struct RrefResult {
    std::vector<RowVec> rows;     // nonzero rows in echelon order
    std::vector<int> pivot_cols;  // ascending, one per row
};

// Reduced row echelon form with leftmost-pivot selection.
RrefResult rref(std::vector<RowVec> rows);

int rank(const std::vector<RowVec>& rows);

// Basis of { v : A v = 0 } where A has the given rows, each of length `width`.
// One vector per free column, ordered by that column; each vector is scaled
// so its first nonzero coordinate is 1.
std::vector<RowVec> kernel_basis(const std::vector<RowVec>& rows, int width);

// One solution of A x = b, free coordinates set to zero; nullopt if inconsistent.
std::optional<RowVec> solve_affine(const std::vector<RowVec>& rows, const RowVec& rhs);

// Row space maintained in reduced echelon form, one insertion at a time.
class SpanBuilder {
public:
    explicit SpanBuilder(int width);

    // True when v was independent of the current span.
    bool insert(RowVec v);
    bool contains(RowVec v) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    const std::vector<RowVec>& rows() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return pivots_; }

private:
    // Reduces v by the stored rows; returns the column of its leading entry, or -1.
    int reduce(RowVec& v) const;

    int width_;
    std::vector<RowVec> rows_;  // pivot entries are 1 and cleared in all other rows
    std::vector<int> pivots_;   // ascending, aligned with rows_
};

}  // namespace genmat
