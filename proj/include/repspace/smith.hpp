#pragma once

#include <vector>

#include "repspace/abelian_group.hpp"
#include "repspace/int_matrix.hpp"

namespace repspace
{

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all >= 0.
struct SmithDecomposition
{
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

/**
 * Smith normal form with transforms, by dense elimination.
 *
 * The pivot at each step is the nonzero entry of least absolute value in the
 * active submatrix, ties going to the lowest row and then the lowest column,
 * so the output is deterministic. Intended for small matrices; boundary
 * matrices go through matrix_invariants() instead.
 */
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Integer> elementary_divisors(const IntMatrix& m);

/// Rank and the non-unit elementary divisors of an integer matrix.
struct MatrixInvariants
{
    Index rank = 0;
    std::vector<Integer> torsion;
};

/**
 * Rank and non-unit elementary divisors of a sparse matrix.
 *
 * Unit pivots are eliminated first (shortest line, then sparsest column)
 * on checked 64-bit arithmetic; whatever has no unit entry left is finished
 * by dense Smith reduction. Any overflow restarts the affected phase on
 * arbitrary-precision integers.
 */
MatrixInvariants matrix_invariants(const SparseIntMatrix& m);

/// Rank over the prime field F_p. Throws NotPrime.
Index rank_mod_p(const SparseIntMatrix& m, unsigned p);

/// Rank over Q.
inline Index rank(const SparseIntMatrix& m) { return matrix_invariants(m).rank; }

/// Z^rows / im(M).
AbelianGroup cokernel(const IntMatrix& m);
AbelianGroup cokernel(const SparseIntMatrix& m);

/**
 * ker(d_k) / im(d_{k+1}) where d_k : C_k -> C_{k-1} and d_{k+1} : C_{k+1} -> C_k.
 * Throws DimensionMismatch on incompatible shapes and CompositionNotZero
 * when d_k * d_{k+1} != 0.
 */
AbelianGroup homology_of_pair(const SparseIntMatrix& d_k, const SparseIntMatrix& d_k1);
AbelianGroup homology_of_pair(const IntMatrix& d_k, const IntMatrix& d_k1);

bool is_prime(unsigned p);

} // namespace repspace
