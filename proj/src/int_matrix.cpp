#include "repspace/int_matrix.hpp"

#include <algorithm>
#include <map>

#include "repspace/errors.hpp"

namespace repspace
{

SparseIntMatrix::SparseIntMatrix(Index rows, Index cols)
    : rows_(rows), columns_(static_cast<std::size_t>(cols))
{
}

SparseIntMatrix SparseIntMatrix::from_triplets(Index rows, Index cols, std::vector<Triplet> triplets)
{
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    SparseIntMatrix m(rows, cols);
    for (auto& t : triplets)
    {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw DimensionMismatch("triplet outside matrix bounds");
        auto& column = m.columns_[static_cast<std::size_t>(t.col)];
        if (!column.empty() && column.back().first == t.row)
            column.back().second += t.value;
        else
            column.emplace_back(t.row, std::move(t.value));
    }
    for (auto& column : m.columns_)
        std::erase_if(column, [](const auto& e) { return e.second == 0; });
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& d)
{
    SparseIntMatrix m(d.rows(), d.cols());
    for (Index c = 0; c < d.cols(); ++c)
        for (Index r = 0; r < d.rows(); ++r)
            if (d(r, c) != 0)
                m.columns_[static_cast<std::size_t>(c)].emplace_back(r, d(r, c));
    return m;
}

SparseIntMatrix SparseIntMatrix::from_columns(Index rows, std::vector<Column> columns)
{
    SparseIntMatrix m;
    m.rows_ = rows;
    m.columns_ = std::move(columns);
    return m;
}

std::size_t SparseIntMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

IntMatrix SparseIntMatrix::to_dense() const
{
    IntMatrix d = IntMatrix::Zero(rows_, cols());
    for (Index c = 0; c < cols(); ++c)
        for (const auto& [r, v] : column(c))
            d(r, c) = v;
    return d;
}

SparseIntMatrix SparseIntMatrix::transpose() const
{
    SparseIntMatrix t(cols(), rows_);
    for (Index c = 0; c < cols(); ++c)
        for (const auto& [r, v] : column(c))
            t.columns_[static_cast<std::size_t>(r)].emplace_back(c, v);
    return t;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product with incompatible shapes");
    SparseIntMatrix out(a.rows(), b.cols());
    std::map<Index, Integer> acc;
    for (Index c = 0; c < b.cols(); ++c)
    {
        acc.clear();
        for (const auto& [k, bv] : b.column(c))
            for (const auto& [r, av] : a.column(k))
                acc[r] += av * bv;
        auto& column = out.columns_[static_cast<std::size_t>(c)];
        for (auto& [r, v] : acc)
            if (v != 0)
                column.emplace_back(r, std::move(v));
    }
    return out;
}

bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b)
{
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

} // namespace repspace
