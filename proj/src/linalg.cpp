#include "defcoh/linalg.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace defcoh {

// Gauss-Jordan over Q. Cochain matrices are mostly zero, so every row
// operation skips zero entries rather than sweeping the full row.
RowEchelon row_echelon(Matrix m)
{
    RowEchelon out;
    const Index rows = m.rows();
    const Index cols = m.cols();
    Index pivot_row = 0;

    for (Index col = 0; col < cols && pivot_row < rows; ++col) {
        Index found = -1;
        for (Index r = pivot_row; r < rows; ++r) {
            if (!is_zero(m(r, col))) {
                found = r;
                break;
            }
        }
        if (found < 0)
            continue;
        if (found != pivot_row)
            m.row(found).swap(m.row(pivot_row));

        const Rational inv = 1 / m(pivot_row, col);
        std::vector<Index> support;
        for (Index c = col; c < cols; ++c) {
            if (!is_zero(m(pivot_row, c))) {
                m(pivot_row, c) *= inv;
                support.push_back(c);
            }
        }

        for (Index r = 0; r < rows; ++r) {
            if (r == pivot_row || is_zero(m(r, col)))
                continue;
            const Rational factor = m(r, col);
            for (Index c : support)
                m(r, c) -= factor * m(pivot_row, c);
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::vector<Vector> kernel_basis_of(const Matrix& m)
{
    const auto echelon = row_echelon(m);
    const Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index c : echelon.pivot_columns)
        is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<Vector> basis;
    for (Index free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        Vector v = zero_vector(cols);
        v(free) = 1;
        for (std::size_t k = 0; k < echelon.pivot_columns.size(); ++k)
            v(echelon.pivot_columns[k]) = -echelon.reduced(static_cast<Index>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseColumns::SparseColumns(Index rows, Index cols)
    : rows_(rows), columns_(static_cast<std::size_t>(cols))
{
}

void SparseColumns::set_column(Index c, std::vector<SparseEntry> entries)
{
    columns_[static_cast<std::size_t>(c)] = compress(std::move(entries));
}

Matrix SparseColumns::to_dense() const
{
    Matrix out = zero_matrix(rows_, cols());
    for (Index c = 0; c < cols(); ++c)
        for (const auto& e : column(c))
            out(e.index, c) = e.value;
    return out;
}

SparseColumns SparseColumns::from_dense(const Matrix& m)
{
    SparseColumns out(m.rows(), m.cols());
    for (Index c = 0; c < m.cols(); ++c) {
        SparseVector col;
        for (Index r = 0; r < m.rows(); ++r)
            if (!is_zero(m(r, c)))
                col.push_back({r, m(r, c)});
        out.columns_[static_cast<std::size_t>(c)] = std::move(col);
    }
    return out;
}

SparseVector compress(std::vector<SparseEntry> entries)
{
    std::sort(entries.begin(), entries.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    SparseVector out;
    for (auto& e : entries) {
        if (!out.empty() && out.back().index == e.index)
            out.back().value += e.value;
        else {
            if (!out.empty() && is_zero(out.back().value))
                out.pop_back();
            out.push_back(std::move(e));
        }
    }
    if (!out.empty() && is_zero(out.back().value))
        out.pop_back();
    return out;
}

SparseVector multiply(const SparseColumns& m, const SparseVector& v)
{
    std::vector<SparseEntry> acc;
    for (const auto& e : v)
        for (const auto& a : m.column(e.index))
            acc.push_back({a.index, a.value * e.value});
    return compress(std::move(acc));
}

SparseColumns multiply(const SparseColumns& a, const SparseColumns& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("sparse product: inner dimensions differ");
    SparseColumns out(a.rows(), b.cols());
    for (Index c = 0; c < b.cols(); ++c) {
        const SparseVector col = multiply(a, b.column(c));
        out.set_column(c, std::vector<SparseEntry>(col.begin(), col.end()));
    }
    return out;
}

namespace {

// v - factor * pivot, both sorted.
SparseVector eliminate(const SparseVector& v, const Rational& factor, const SparseVector& pivot)
{
    SparseVector out;
    out.reserve(v.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < v.size() && v[i].index < pivot[j].index)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || pivot[j].index < v[i].index) {
            out.push_back({pivot[j].index, -factor * pivot[j].value});
            ++j;
        } else {
            Rational value = v[i].value - factor * pivot[j].value;
            if (!is_zero(value))
                out.push_back({v[i].index, std::move(value)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Index rank(const SparseColumns& m)
{
    // pivots keyed by leading index, each normalized to leading coefficient 1
    std::map<Index, SparseVector> pivots;
    for (Index c = 0; c < m.cols(); ++c) {
        SparseVector v = m.column(c);
        while (!v.empty()) {
            const auto it = pivots.find(v.front().index);
            if (it == pivots.end()) {
                const Rational inv = 1 / v.front().value;
                for (auto& e : v)
                    e.value *= inv;
                pivots.emplace(v.front().index, std::move(v));
                break;
            }
            v = eliminate(v, v.front().value, it->second);
        }
    }
    return static_cast<Index>(pivots.size());
}

} // namespace defcoh
