#include <doctest.h>

#include <numeric>

#include "repspace/catalog.hpp"
#include "repspace/counting.hpp"
#include "repspace/errors.hpp"

using namespace repspace;

namespace
{

const AbelianGroup Z2 = AbelianGroup::cyclic(2);

std::vector<long> as_longs(const std::vector<Integer>& v)
{
    std::vector<long> out;
    for (const auto& x : v)
        out.push_back(x.convert_to<long>());
    return out;
}

} // namespace

TEST_CASE("closed-form counts")
{
    CHECK(a_count(1) == 0);
    CHECK(a_count(2) == 1);
    CHECK(a_count(3) == 7);
    CHECK(c_count(2) == 1);
    CHECK(c_count(3) == 4);
    CHECK(c_count(4) == 13);
    CHECK(c_via_recurrence(3) == 4);
    CHECK(d_count(1) == 0);
    CHECK(d_count(2) == 1);
    CHECK(d_count(3) == 14);
    CHECK(k_count(2) == 1);
    CHECK(k_count(3) == 11);
    CHECK(k_count(4) == 90);
    CHECK(3 * k_count(1) + 3 * k_count(2) + k_count(3) == d_count(3));
    CHECK(n_central_product(2, 1, 2) == 2);
    CHECK(n_central_product(3, 1, 2) == 8);
    CHECK(n_central_product(2, 2, 2) == 2);
    CHECK(n_central_product(3, 1, 3) == 1 + 26 * 8 / 8);

    CHECK_THROWS_AS(a_count(0), Unsupported);
    CHECK_THROWS_AS(n_central_product(3, 1, 4), NotPrime);
    CHECK_THROWS_AS(n_central_product(1, 1, 2), Unsupported);
}

TEST_CASE("recurrences agree with the closed forms")
{
    for (int n = 1; n <= 20; ++n)
    {
        CAPTURE(n);
        CHECK(c_count(n) == c_via_recurrence(n));
        CHECK(k_count(n) == k_via_recurrence(n));
        Integer cs = 0, ks = 0;
        for (int r = 1; r <= n; ++r)
        {
            cs += binomial(n, r) * c_count(r);
            ks += binomial(n, r) * k_count(r);
        }
        CHECK(cs == a_count(n));
        CHECK(ks == d_count(n));
        // D(n) = 2^{n-2} A(n) for n >= 2
        if (n >= 2)
            CHECK(d_count(n) == ipow(Integer(2), static_cast<unsigned>(n - 2)) * a_count(n));
    }
}

TEST_CASE("r(i)")
{
    CHECK(r_of(3, 2) == 1);
    CHECK(r_of(3, 1) == 4);
    CHECK(r_of(4, 4) == 0);
    CHECK(r_of(4, 0) == 0);
    for (int n = 1; n <= 12; ++n)
        for (int i = 1; i <= n; ++i)
        {
            Integer tail = 0;
            for (int t = n - i; t <= n; ++t)
                tail += binomial(n, t);
            CHECK(r_of(n, i) + tail == ipow(Integer(2), static_cast<unsigned>(n)));
        }
}

TEST_CASE("type matrices")
{
    CHECK(count_types(3, Z2) == 8);
    CHECK(count_types(2, Z2) == 2);
    CHECK(enumerate_types(2, AbelianGroup::cyclic(3)).size() == 3);
    CHECK(count_types(2, AbelianGroup({}, {2, 2})) == 4);

    const FiniteAbelianGroup z2z4(AbelianGroup({}, {2, 4}));
    const auto ts = enumerate_types(3, z2z4.group());
    CHECK(ts.size() == 512);
    for (const auto& t : ts)
        CHECK(is_type_matrix(t, z2z4));
    TypeMatrix bad = ts[5];
    bad.entries[1] = (bad.entries[1] + 1) % z2z4.order();
    CHECK_FALSE(is_type_matrix(bad, z2z4));

    CHECK_THROWS_AS(enumerate_types(7, Z2), ResourceGuard);
    CHECK_THROWS_AS(count_types(2, AbelianGroup::free(1)), Unsupported);
}

TEST_CASE("strata of type matrices")
{
    CHECK(as_longs(strata_counts(2, Z2)) == std::vector<long>{1, 0, 1});
    CHECK(as_longs(strata_counts(3, Z2)) == std::vector<long>{4, 3, 0, 1});
    for (const auto& k : {Z2, AbelianGroup::cyclic(3), AbelianGroup({}, {2, 2})})
        for (int r = 1; r <= 4; ++r)
        {
            const auto s = strata_counts(r, k);
            CHECK(std::accumulate(s.begin(), s.end(), Integer(0)) == count_types(r, k));
            CHECK(s[static_cast<std::size_t>(r)] == 1);
            if (r >= 1)
                CHECK(s[static_cast<std::size_t>(r - 1)] == 0);
        }
}

TEST_CASE("types realizable in SU(2) are exactly the forms of rank at most two")
{
    CHECK(n_lower_bound_su2(1) == 1);
    CHECK(n_lower_bound_su2(2) == 2);
    CHECK(n_lower_bound_su2(3) == 8);
    for (int n = 1; n <= 6; ++n)
    {
        long small = 0;
        for (const auto& t : enumerate_types(n, Z2))
            small += f2_rank(t) <= 2;
        CHECK(Integer(small) == n_lower_bound_su2(n));
    }
}

TEST_CASE("Eilenberg-MacLane decomposition tables")
{
    const auto u2 = em_decomposition(EmTarget::U, 2);
    CHECK(u2[1] == AbelianGroup::free(2));
    CHECK(u2[2] == AbelianGroup::free(1));
    const auto su2 = em_decomposition(EmTarget::SU, 2);
    CHECK(su2[1].is_trivial());
    CHECK(su2[2] == AbelianGroup::free(1));
    CHECK(su2.size() == 3);
    const auto sp3 = em_decomposition(EmTarget::Sp, 3);
    CHECK(sp3[2] == AbelianGroup(3, {2}));
    CHECK(sp3[1].is_trivial());
    CHECK(sp3[3].is_trivial());
}

TEST_CASE("Sp tables agree with the engine on the conjugation quotient")
{
    for (int n = 1; n <= 4; ++n)
    {
        CAPTURE(n);
        const auto pi = em_decomposition(EmTarget::Sp, n);
        const auto h = homology(torus_conj_quotient(n));
        for (int i = 2; i <= n; i += 2)
            CHECK(pi[static_cast<std::size_t>(i)] == h[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("abelianization")
{
    CHECK(abelianization(FiniteGroup::quaternion_q8()) == AbelianGroup({}, {2, 2}));
    CHECK(abelianization(FiniteGroup::symmetric(3)) == AbelianGroup::cyclic(2));
    CHECK(abelianization(FiniteGroup::cyclic(6)) == AbelianGroup::cyclic(6));
    CHECK(abelianization(FiniteGroup::trivial()).is_trivial());
}
