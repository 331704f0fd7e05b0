#include <doctest.h>

#include "repspace/catalog.hpp"
#include "repspace/counting.hpp"
#include "repspace/errors.hpp"
#include "repspace/splitting.hpp"

using namespace repspace;

namespace
{

const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup Z2 = AbelianGroup::cyclic(2);
const AbelianGroup O;

GradedGroup G(std::vector<AbelianGroup> v)
{
    return GradedGroup(std::move(v));
}

} // namespace

TEST_CASE("splitting examples")
{
    const auto h3 = verify_splitting(Family::HomCircle, 3);
    CHECK(h3.passed());
    CHECK(h3.checks[0].actual == G({O, Z.power(3), Z.power(3), Z}));

    const auto r2 = verify_splitting(Family::RepSU2, 2);
    CHECK(r2.passed());
    CHECK(r2.checks[0].actual == G({O, O, Z}));

    const auto r3 = verify_splitting(Family::RepSU2, 3);
    CHECK(r3.passed());
    CHECK(r3.checks[0].actual[2] == AbelianGroup(3, {2}));

    CHECK_THROWS_AS(verify_splitting(Family::HomCircle, 6), ResourceGuard);
    CHECK_THROWS_AS(verify_splitting(Family::RepSU2, 5), ResourceGuard);
    CHECK_THROWS_AS(verify_splitting(Family::SpCircle, 4), ResourceGuard);
    CHECK(parse_family("sp_circle") == Family::SpCircle);
    CHECK_THROWS_AS(parse_family("hom_torus"), UnknownSpace);
}

TEST_CASE("splitting holds for every supported family and n")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(verify_splitting(Family::HomCircle, n).passed());
    for (int n = 1; n <= 4; ++n)
        CHECK(verify_splitting(Family::RepSU2, n).passed());
    for (int n = 1; n <= 3; ++n)
    {
        CAPTURE(n);
        const auto r = verify_splitting(Family::SpCircle, n, 2);
        CHECK(r.passed());
        CHECK(r.to_json().at("passed") == true);
    }
}

TEST_CASE("reports")
{
    Report r;
    r.title = "t";
    r.checks.push_back({"good", G({Z}), G({Z})});
    CHECK(r.passed());
    r.checks.push_back({"bad", G({Z}), G({Z2})});
    CHECK_FALSE(r.passed());
    CHECK(r.to_table().find("FAIL  bad") != std::string::npos);
    CHECK(r.to_json().at("checks").size() == 2);
}

TEST_CASE("degeneracy filtration")
{
    const auto f = degeneracy_filtration(2);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == torus(2).product.space);
    CHECK(homology(f[2]) == G({Z}));
    CHECK(f[2].total_count() == 1);
    CHECK(homology(f[1]) == G({Z, Z.power(2)}));
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= n; ++r)
        {
            CAPTURE(n);
            CAPTURE(r);
            GradedGroup sphere;
            sphere.set(static_cast<std::size_t>(n - r), Z);
            const GradedGroup expected = r == n ? GradedGroup() : reduce(sphere).power(binomial(n, r).convert_to<std::size_t>());
            CHECK(reduced_homology(filtration_layer(n, r)) == expected);
        }
}

TEST_CASE("wedge bookkeeping")
{
    const GradedGroup s1 = G({O, Z});
    CHECK(poincare_assembly({{1, s1}}) == s1);
    CHECK(poincare_assembly({{3, s1}}) == G({O, Z.power(3)}));
    CHECK(poincare_assembly({}) == GradedGroup());
    const GradedGroup a = G({O, Z2}), b = G({O, O, Z}), c = G({Z, O, O, Z2});
    CHECK(poincare_assembly({{1, a}, {2, b}, {1, c}}) == poincare_assembly({{1, c}, {1, a}, {2, b}}));
    CHECK(poincare_assembly({{1, poincare_assembly({{1, a}, {2, b}})}, {1, c}}) ==
          poincare_assembly({{1, a}, {1, poincare_assembly({{2, b}, {1, c}})}}));

    // C(3) = 4 lens summands with disjoint basepoints plus the Thom space part.
    const auto so3 = rank_one_catalog(RankOne::SO3, 3);
    const GradedGroup thom = reduced_homology(thom_space(3));
    CHECK(thom == G({O, O, O, Z2, O, Z}));
    CHECK(so3.reduced == G({Z.power(4), AbelianGroup({}, std::vector<Integer>(8, 2)), O, Z.power(4) + Z2, O, Z}));
}

TEST_CASE("rank-one stable factors")
{
    for (int n = 1; n <= 4; ++n)
    {
        GradedGroup s;
        s.set(static_cast<std::size_t>(n), Z);
        CHECK(rank_one_catalog(RankOne::S1, n).reduced == s);
    }
    CHECK(rank_one_catalog(RankOne::SU2, 1).reduced == G({O, O, O, Z}));
    CHECK(rank_one_catalog(RankOne::SU2, 1).description == "S^3");
    CHECK(rank_one_catalog(RankOne::SO3, 1).reduced == G({O, Z2, O, Z}));

    const auto so3 = rank_one_catalog(RankOne::SO3, 2);
    CHECK(so3.reduced[1] == AbelianGroup({}, {2, 2}));
    CHECK(so3.reduced == G({Z, AbelianGroup({}, {2, 2}), Z, Z + Z2}));

    for (int n = 1; n <= 8; ++n)
    {
        CAPTURE(n);
        const auto su2 = rank_one_catalog(RankOne::SU2, n).reduced;
        CHECK(su2[0].is_trivial());
        CHECK(su2[1].is_trivial());
    }

    // Modulo conjugation: finite point sets wedged onto S^n / Sigma_2.
    CHECK(*rank_one_catalog(RankOne::SU2, 2).modulo_conjugation == G({O, O, Z}));
    CHECK(*rank_one_catalog(RankOne::SO3, 3).modulo_conjugation == G({Z.power(4), O, Z2}));
    CHECK(*rank_one_catalog(RankOne::B_SU2_Z2, 2).modulo_conjugation == G({Z, O, Z}));
    CHECK(rank_one_catalog(RankOne::B_SU2_Z2, 3).reduced[0] == Z.power(11));

    CHECK_THROWS_AS(rank_one_catalog(RankOne::SU2, 0), Unsupported);
    CHECK_THROWS_AS(parse_rank_one("SU3"), Unsupported);
}

TEST_CASE("the factors reassemble Hom(Z^n, SU(2)) and Rep(Z^n, SU(2))")
{
    // Rep(Z^n, SU(2)) = T^n / Z2, whose reduced homology the stable factors must add up to.
    for (int n = 1; n <= 4; ++n)
    {
        std::vector<std::pair<std::size_t, GradedGroup>> parts;
        for (int r = 1; r <= n; ++r)
            parts.emplace_back(binomial(n, r).convert_to<std::size_t>(),
                               *rank_one_catalog(RankOne::SU2, r).modulo_conjugation);
        CHECK(poincare_assembly(parts) == reduced_homology(torus_conj_quotient(n)));
    }
    // Hom(Z^2, SU(2)): two copies of S^3 and the cofiber of the zero section.
    const GradedGroup hom2 = poincare_assembly(
        {{2, rank_one_catalog(RankOne::SU2, 1).reduced}, {1, rank_one_catalog(RankOne::SU2, 2).reduced}});
    CHECK(hom2 == G({O, O, Z, Z.power(2) + Z2}));
}

TEST_CASE("homology proposition and symmetric product corollaries")
{
    for (int n = 1; n <= 4; ++n)
        CHECK(check_homology_prop(n).passed());
    const auto n4 = check_homology_prop(4).checks[0].actual;
    CHECK(n4[2] == AbelianGroup(6, std::vector<Integer>(5, 2)));
    CHECK(n4[4] == Z);

    const auto u = check_rep_u_cohomology(2);
    CHECK(u.passed());
    CHECK(u.checks[0].actual.betti_numbers() == std::vector<std::size_t>{1, 2, 2, 2, 1});
    for (int m = 0; m <= 2; ++m)
        CHECK(check_rep_sp(m).passed());
    CHECK(check_rep_sp(0).checks[0].actual == G({Z}));
}
