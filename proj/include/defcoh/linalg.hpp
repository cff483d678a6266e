#ifndef DEFCOH_LINALG_HPP
#define DEFCOH_LINALG_HPP

#include "defcoh/scalar.hpp"

#include <vector>

namespace defcoh {

struct RankNullity {
    Index rank = 0;
    Index nullity = 0;
};

/// Reduced row echelon form computed by exact elimination (no pivot tolerance).
struct RowEchelon {
    Matrix reduced;
    std::vector<Index> pivot_columns;
};

RowEchelon row_echelon(Matrix m);

template <typename Derived>
RankNullity rank_nullity(const Eigen::MatrixBase<Derived>& m)
{
    const auto echelon = row_echelon(Matrix(m));
    const auto rank = static_cast<Index>(echelon.pivot_columns.size());
    return {rank, m.cols() - rank};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m)
{
    return rank_nullity(m).rank;
}

/// Basis of {v : m v = 0}, one vector per free column of the echelon form.
std::vector<Vector> kernel_basis_of(const Matrix& m);

template <typename Derived>
std::vector<Vector> kernel_basis(const Eigen::MatrixBase<Derived>& m)
{
    return kernel_basis_of(Matrix(m));
}

/// Sorted (index, value) pairs with no stored zeros.
struct SparseEntry {
    Index index;
    Rational value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};
using SparseVector = std::vector<SparseEntry>;

/// Column-compressed exact matrix, for complexes too large to hold densely.
class SparseColumns {
public:
    SparseColumns(Index rows, Index cols);

    Index rows() const { return rows_; }
    Index cols() const { return static_cast<Index>(columns_.size()); }
    const SparseVector& column(Index c) const { return columns_[static_cast<std::size_t>(c)]; }

    /// Replaces column c; entries may be unsorted and repeated, they are summed.
    void set_column(Index c, std::vector<SparseEntry> entries);

    Matrix to_dense() const;
    static SparseColumns from_dense(const Matrix& m);

private:
    Index rows_;
    std::vector<SparseVector> columns_;
};

/// Sorts by index, sums repeats and drops zeros.
SparseVector compress(std::vector<SparseEntry> entries);

SparseVector multiply(const SparseColumns& m, const SparseVector& v);
SparseColumns multiply(const SparseColumns& a, const SparseColumns& b);

/// Rank of the span of the columns, by incremental sparse elimination.
Index rank(const SparseColumns& m);

} // namespace defcoh

#endif // DEFCOH_LINALG_HPP
