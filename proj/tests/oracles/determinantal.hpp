#pragma once

// Test-only oracles for integer matrices. These deliberately share no code
// with the elimination kernels they check.

#include <vector>

#include "repspace/int_matrix.hpp"

namespace oracle
{

using repspace::Index;
using repspace::IntMatrix;
using repspace::Integer;

/// Determinant by cofactor expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m)
{
    const Index n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Integer total = 0;
    for (Index c = 0; c < n; ++c)
    {
        if (m(0, c) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (Index r = 1; r < n; ++r)
            for (Index cc = 0, k = 0; cc < n; ++cc)
                if (cc != c)
                    minor(r - 1, k++) = m(r, cc);
        Integer term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

inline void subsets(Index n, Index k, Index start, std::vector<Index>& cur, std::vector<std::vector<Index>>& out)
{
    if (static_cast<Index>(cur.size()) == k)
    {
        out.push_back(cur);
        return;
    }
    for (Index i = start; i < n; ++i)
    {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/**
 * Elementary divisors from determinantal divisors: D_k is the gcd of all
 * k x k minors and d_k = D_k / D_{k-1}. Exponential; use on tiny matrices.
 */
inline std::vector<Integer> determinantal_divisors(const IntMatrix& m)
{
    std::vector<Integer> out;
    Integer previous = 1;
    for (Index k = 1; k <= std::min(m.rows(), m.cols()); ++k)
    {
        std::vector<std::vector<Index>> rs, cs;
        std::vector<Index> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs)
            {
                IntMatrix minor(k, k);
                for (Index i = 0; i < k; ++i)
                    for (Index j = 0; j < k; ++j)
                        minor(i, j) = m(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
                g = gcd(g, cofactor_det(minor));
            }
        if (g == 0)
            break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

/// Rank over Q by fraction-free (Bareiss-style) row reduction.
inline Index rational_rank(IntMatrix m)
{
    Index rank = 0;
    for (Index c = 0; c < m.cols() && rank < m.rows(); ++c)
    {
        Index p = -1;
        for (Index r = rank; r < m.rows(); ++r)
            if (m(r, c) != 0)
            {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        m.row(rank).swap(m.row(p));
        for (Index r = rank + 1; r < m.rows(); ++r)
        {
            Integer f = m(r, c);
            Integer g = m(rank, c);
            for (Index cc = 0; cc < m.cols(); ++cc)
                m(r, cc) = m(r, cc) * g - m(rank, cc) * f;
        }
        ++rank;
    }
    return rank;
}

} // namespace oracle
