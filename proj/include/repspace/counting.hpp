#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repspace/abelian_group.hpp"
#include "repspace/finite_group.hpp"
#include "repspace/integer.hpp"

namespace repspace
{

// Component counts for spaces of (almost) commuting tuples in rank-one groups.
// Every formula is evaluated over Q and checked to be integral (NonIntegral otherwise).

/// (2^n - 1)(2^{n-1} - 1)/3: Q8 components of Hom(Z^n, SO(3)).
Integer a_count(int n);
/// (3^{n-1} - 1)/2.
Integer c_count(int n);
/// C(n) from sum_{r<=n} binom(n,r) C(r) = A(n).
Integer c_via_recurrence(int n);
/// 2^{n-2}(2^n - 1)(2^{n-1} - 1)/3; D(1) = 0.
Integer d_count(int n);
/// 7^n/24 - 3^n/8 + 1/12.
Integer k_count(int n);
/// K(n) from sum_{r<=n} binom(n,r) K(r) = D(n).
Integer k_via_recurrence(int n);
/// p^{(m-1)(n-2)}(p^n - 1)(p^{n-1} - 1)/(p^2 - 1) + 1. Throws NotPrime.
Integer n_central_product(int n, int m, unsigned p);

/// binom(n,0) + ... + binom(n, n-i-1) for 1 <= i <= n, 0 otherwise.
Integer r_of(int n, int i);

/**
 * Finite abelian group K = Z/d_1 + ... + Z/d_t with elements encoded in mixed
 * radix as 0..order-1 (code 0 is the identity).
 */
class FiniteAbelianGroup
{
public:
    /// Throws Unsupported if g has free rank.
    explicit FiniteAbelianGroup(const AbelianGroup& g);

    std::uint64_t order() const { return order_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t negate(std::uint64_t a) const;
    std::vector<std::uint64_t> coordinates(std::uint64_t a) const;
    std::string element_string(std::uint64_t a) const;
    const AbelianGroup& group() const { return group_; }

private:
    AbelianGroup group_;
    std::vector<std::uint64_t> radix_;
    std::uint64_t order_ = 1;
};

/// Antisymmetric n x n matrix over K: c_ii = 0, c_ji = -c_ij (written additively).
struct TypeMatrix
{
    int n = 0;
    std::vector<std::uint64_t> entries; // row-major

    std::uint64_t at(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
    friend bool operator==(const TypeMatrix&, const TypeMatrix&) = default;
};

/// |K|^binom(n,2).
Integer count_types(int n, const AbelianGroup& k);
/// All type matrices in lexicographic order of their upper triangles. Throws ResourceGuard past 10^6.
std::vector<TypeMatrix> enumerate_types(int n, const AbelianGroup& k);
/// Checks the antisymmetry invariants.
bool is_type_matrix(const TypeMatrix& c, const FiniteAbelianGroup& k);
/// |T_i(r,K)|: types with exactly i rows equal to the identity, i = 0..r.
std::vector<Integer> strata_counts(int r, const AbelianGroup& k);

/// Rank over F_2 of a Z/2 type matrix read as an alternating form.
int f2_rank(const TypeMatrix& c);
/// Number of types in T(n, Z/2) with nonempty almost-commuting space in SU(2): 1 + A(n).
Integer n_lower_bound_su2(int n);

enum class EmTarget
{
    U,
    SU,
    Sp
};

/// Homotopy groups pi_i of Rep(Z^n, G) for the stable group G, as a graded table.
GradedGroup em_decomposition(EmTarget target, int n);

/// G / [G, G], as the cokernel of the relations e_a + e_b - e_{ab}.
AbelianGroup abelianization(const FiniteGroup& g);

} // namespace repspace
