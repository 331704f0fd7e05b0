#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "repspace/integer.hpp"

namespace repspace
{

using Index = std::ptrdiff_t;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense arbitrary-precision integer matrix.
using IntMatrix = DenseMatrix<Integer>;

struct Triplet
{
    Index row;
    Index col;
    Integer value;
};

/**
 * Column-compressed sparse integer matrix.
 *
 * Each column holds (row, value) pairs sorted by row with no explicit zeros.
 * This is the layout of every boundary matrix; it is immutable once built.
 */
class SparseIntMatrix
{
public:
    using Column = std::vector<std::pair<Index, Integer>>;

    SparseIntMatrix() = default;
    SparseIntMatrix(Index rows, Index cols);

    static SparseIntMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> triplets);
    static SparseIntMatrix from_dense(const IntMatrix& m);
    /// Takes columns that are already sorted and zero-free.
    static SparseIntMatrix from_columns(Index rows, std::vector<Column> columns);

    Index rows() const { return rows_; }
    Index cols() const { return static_cast<Index>(columns_.size()); }
    std::size_t nonzeros() const;
    const Column& column(Index c) const { return columns_[static_cast<std::size_t>(c)]; }
    const std::vector<Column>& columns() const { return columns_; }

    IntMatrix to_dense() const;
    SparseIntMatrix transpose() const;
    bool is_zero() const { return nonzeros() == 0; }

    friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
    friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b);

private:
    Index rows_ = 0;
    std::vector<Column> columns_;
};

} // namespace repspace
