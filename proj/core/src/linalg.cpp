#include "genmat/linalg.hpp"

#include <algorithm>
#include <utility>

#include "genmat/errors.hpp"

namespace genmat {

namespace {

std::size_t row_width(const std::vector<RowVec>& rows) {
    std::size_t w = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != w) throw PreconditionError("ragged row lengths");
    return w;
}

}  // namespace

RrefResult rref(std::vector<RowVec> rows) {
    const std::size_t width = row_width(rows);
    RrefResult out;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < width && next_row < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = next_row; r < rows.size(); ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[next_row], rows[pivot]);
        const Rational lead = rows[next_row][col];
        for (std::size_t j = col; j < width; ++j) rows[next_row][j] /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col];
            for (std::size_t j = col; j < width; ++j)
                rows[r][j] -= factor * rows[next_row][j];
        }
        out.pivot_cols.push_back(static_cast<int>(col));
        ++next_row;
    }
    rows.resize(next_row);
    out.rows = std::move(rows);
    return out;
}

int rank(const std::vector<RowVec>& rows) {
    return static_cast<int>(rref(rows).pivot_cols.size());
}

std::vector<RowVec> kernel_basis(const std::vector<RowVec>& rows, int width) {
    if (width < 0) throw PreconditionError("kernel width must be nonnegative");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != width)
            throw PreconditionError("row length does not match stated width");
    RrefResult ech = rref(rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(width), false);
    for (int c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<RowVec> basis;
    for (int free = 0; free < width; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RowVec v(static_cast<std::size_t>(width));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < ech.rows.size(); ++r)
            v[static_cast<std::size_t>(ech.pivot_cols[r])] =
                -ech.rows[r][static_cast<std::size_t>(free)];
        for (const auto& entry : v) {
            if (entry == 0) continue;
            if (entry != 1) {
                const Rational lead = entry;  // copy: entry aliases into v
                for (auto& x : v) x /= lead;
            }
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RowVec> solve_affine(const std::vector<RowVec>& rows, const RowVec& rhs) {
    if (rows.size() != rhs.size())
        throw PreconditionError("right-hand side length does not match row count");
    const std::size_t width = row_width(rows);
    std::vector<RowVec> aug = rows;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
    RrefResult ech = rref(std::move(aug));
    RowVec x(width);
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
        if (ech.pivot_cols[r] == static_cast<int>(width)) return std::nullopt;
        x[static_cast<std::size_t>(ech.pivot_cols[r])] = ech.rows[r].back();
    }
    return x;
}

SpanBuilder::SpanBuilder(int width) : width_(width) {
    if (width <= 0) throw PreconditionError("span width must be positive");
}

int SpanBuilder::reduce(RowVec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = static_cast<std::size_t>(pivots_[r]);
        if (v[p] == 0) continue;
        const Rational factor = v[p];
        for (std::size_t j = p; j < v.size(); ++j) v[j] -= factor * rows_[r][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) return static_cast<int>(j);
    return -1;
}

bool SpanBuilder::insert(RowVec v) {
    if (static_cast<int>(v.size()) != width_)
        throw PreconditionError("vector length does not match span width");
    const int lead = reduce(v);
    if (lead < 0) return false;
    const Rational head = v[static_cast<std::size_t>(lead)];
    for (auto& x : v) x /= head;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational& entry = rows_[r][static_cast<std::size_t>(lead)];
        if (entry == 0) continue;
        const Rational factor = entry;
        for (std::size_t j = static_cast<std::size_t>(lead); j < v.size(); ++j)
            rows_[r][j] -= factor * v[j];
    }
    const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool SpanBuilder::contains(RowVec v) const {
    if (static_cast<int>(v.size()) != width_)
        throw PreconditionError("vector length does not match span width");
    return reduce(v) < 0;
}

}  // namespace genmat
