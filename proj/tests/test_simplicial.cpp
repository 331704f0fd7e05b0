#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles/shuffle.hpp"
#include "repspace/errors.hpp"
#include "repspace/homology.hpp"

using namespace repspace;

namespace
{

GradedGroup groups(std::initializer_list<AbelianGroup> gs) { return GradedGroup(std::vector<AbelianGroup>(gs)); }
const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup O;

std::vector<std::vector<std::size_t>> f_vectors(std::initializer_list<const SimplicialSet*> xs)
{
    std::vector<std::vector<std::size_t>> out;
    for (const auto* x : xs)
        out.push_back(x->f_vector());
    return out;
}

// A random formal simplex of x of dimension k >= base dimension.
FormalSimplex random_formal(std::mt19937_64& rng, const SimplicialSet& x, int k)
{
    std::uniform_int_distribution<int> pick_dim(0, std::min(k, x.dimension()));
    int d;
    do
        d = pick_dim(rng);
    while (x.count(d) == 0);
    FormalSimplex f = FormalSimplex::nondegenerate(d, std::uniform_int_distribution<int>(0, static_cast<int>(x.count(d)) - 1)(rng));
    while (f.dim() < k)
        f = SimplicialSet::degeneracy(f, std::uniform_int_distribution<int>(0, f.dim())(rng));
    return f;
}

} // namespace

TEST_CASE("fixture models are valid simplicial sets")
{
    for (const auto& x : {fixture::point(), fixture::sphere0(), fixture::circle(), fixture::minimal_circle(),
                          fixture::sphere2(), fixture::rp2(), fixture::torus()})
    {
        CHECK_NOTHROW(x.validate());
        CHECK_NOTHROW(normalized_chains(x).validate());
    }
}

TEST_CASE("normalized chains of the 2-gon circle")
{
    auto c = normalized_chains(fixture::circle());
    CHECK(c.ranks == std::vector<Index>{2, 2});
    IntMatrix expected(2, 2);
    expected << Integer(-1), Integer(-1), Integer(1), Integer(1);
    CHECK(c.boundary(1).to_dense() == expected);

    auto p = normalized_chains(fixture::point());
    CHECK(p.ranks == std::vector<Index>{1});
}

TEST_CASE("RP2 fixture")
{
    CHECK(homology(fixture::rp2()) == groups({Z, AbelianGroup::cyclic(2)}));
}

TEST_CASE("formal simplex faces satisfy the simplicial identities")
{
    std::mt19937_64 rng(11);
    const auto t2 = fixture::torus();
    const auto rp2 = fixture::rp2();
    const auto s2 = fixture::sphere2();
    for (const SimplicialSet* x : {&t2, &rp2, &s2})
        for (int trial = 0; trial < 400; ++trial)
        {
            const int k = std::uniform_int_distribution<int>(1, 6)(rng);
            const auto f = random_formal(rng, *x, k);
            CAPTURE(f.degeneracies);
            CAPTURE(f.base_dim);
            for (int j = 1; k >= 2 && j <= k; ++j)
                for (int i = 0; i < j; ++i)
                    CHECK(x->face(x->face(f, j), i) == x->face(x->face(f, i), j - 1));
            for (int j = 0; j <= k; ++j)
                for (int i = 0; i <= k + 1; ++i)
                {
                    const auto lhs = x->face(SimplicialSet::degeneracy(f, j), i);
                    if (i < j)
                        CHECK(lhs == SimplicialSet::degeneracy(x->face(f, i), j - 1));
                    else if (i == j || i == j + 1)
                        CHECK(lhs == f);
                    else
                        CHECK(lhs == SimplicialSet::degeneracy(x->face(f, i - 1), j));
                }
            for (int j = 0; j < k; ++j)
                for (int i = 0; i <= j; ++i)
                    CHECK(SimplicialSet::degeneracy(SimplicialSet::degeneracy(f, j), i) ==
                          SimplicialSet::degeneracy(SimplicialSet::degeneracy(f, i), j + 1));
        }
}

TEST_CASE("product unit law")
{
    const auto pt = fixture::point();
    for (const auto& x : {fixture::circle(), fixture::rp2(), fixture::torus()})
    {
        auto p = product({&pt, &x});
        CHECK_NOTHROW(p.space.validate());
        CHECK(p.space.f_vector() == x.f_vector());
        CHECK(homology(p.space) == homology(x));
        for (std::size_t k = 0; k < p.coordinates.size(); ++k)
            for (std::size_t s = 0; s < p.coordinates[k].size(); ++s)
            {
                const auto& second = p.coordinates[k][s][1];
                CHECK(second == FormalSimplex::nondegenerate(static_cast<int>(k), static_cast<int>(s)));
            }
    }
}

TEST_CASE("product f-vectors match shuffle enumeration")
{
    const auto c = fixture::circle();
    const auto rp2 = fixture::rp2();
    const auto s2 = fixture::sphere2();
    CHECK(product({&c, &c}).space.f_vector() == std::vector<std::size_t>{4, 12, 8});
    CHECK(oracle::product_f_vector(f_vectors({&c, &c})) == std::vector<std::size_t>{4, 12, 8});
    CHECK(product({&c, &c, &c}).space.f_vector() == oracle::product_f_vector(f_vectors({&c, &c, &c})));
    CHECK(product({&rp2, &s2}).space.f_vector() == oracle::product_f_vector(f_vectors({&rp2, &s2})));
    CHECK(product({&rp2, &c, &rp2}).space.f_vector() == oracle::product_f_vector(f_vectors({&rp2, &c, &rp2})));
}

TEST_CASE("Kunneth formula for torsion-free factors")
{
    const auto c = fixture::circle();
    const auto t2 = fixture::torus();
    const auto s2 = fixture::sphere2();
    for (const SimplicialSet* x : {&c, &t2, &s2})
        for (const SimplicialSet* y : {&c, &t2, &s2})
        {
            auto bx = homology(*x).betti_numbers();
            auto by = homology(*y).betti_numbers();
            std::vector<std::size_t> conv(bx.size() + by.size() - 1, 0);
            for (std::size_t i = 0; i < bx.size(); ++i)
                for (std::size_t j = 0; j < by.size(); ++j)
                    conv[i + j] += bx[i] * by[j];
            std::vector<AbelianGroup> expected;
            for (auto b : conv)
                expected.push_back(AbelianGroup::free(b));
            CHECK(homology(product(*x, *y)) == GradedGroup(expected));
        }
    CHECK(homology(t2) == groups({Z, AbelianGroup::free(2), Z}));
}

TEST_CASE("quotients by group actions")
{
    const auto c = fixture::circle();
    SUBCASE("trivial action")
    {
        auto q = quotient_by_action(c, SimplicialAction::trivial(c));
        CHECK(q.space == c);
        const auto rp2 = fixture::rp2();
        CHECK(quotient_by_action(rp2, SimplicialAction::trivial(rp2, FiniteGroup::cyclic(3))).space.f_vector() ==
              rp2.f_vector());
    }
    SUBCASE("conjugation on the circle gives an arc")
    {
        auto q = quotient_by_action(c, fixture::conjugation(c));
        CHECK(q.space.f_vector() == std::vector<std::size_t>{2, 1});
        CHECK(homology(q.space) == groups({Z}));
    }
    SUBCASE("diagonal conjugation on the torus gives a sphere")
    {
        auto p = product({&c, &c});
        auto conj = fixture::conjugation(c);
        auto a = diagonal_action(p, {&conj, &conj});
        CHECK_NOTHROW(a.validate(p.space));
        CHECK(homology(quotient_by_action(p.space, a).space) == groups({Z, O, Z}));
    }
    SUBCASE("free swap of two circles")
    {
        auto two = disjoint_union({&c, &c});
        SimplicialAction swap = SimplicialAction::trivial(two, FiniteGroup::cyclic(2));
        for (int k = 0; k <= 1; ++k)
        {
            auto& p = swap.perm[1][static_cast<std::size_t>(k)];
            for (std::size_t s = 0; s < p.size(); ++s)
                p[s] = static_cast<int>((s + p.size() / 2) % p.size());
        }
        CHECK(homology(two) == groups({AbelianGroup::free(2), AbelianGroup::free(2)}));
        CHECK(homology(quotient_by_action(two, swap).space) == groups({Z, Z}));
    }
    SUBCASE("invalid actions are rejected")
    {
        SimplicialAction bad = SimplicialAction::trivial(c, FiniteGroup::cyclic(2));
        bad.perm[1][0] = {1, 0}; // swaps the vertices but fixes the edges
        CHECK_THROWS_AS(quotient_by_action(c, bad), ActionInvalid);
        bad.perm[1][0] = {0, 0};
        CHECK_THROWS_AS(bad.validate(c), ActionInvalid);
        SimplicialAction identity_moves = SimplicialAction::trivial(c);
        identity_moves.perm[0][1] = {1, 0};
        CHECK_THROWS_AS(identity_moves.validate(c), ActionInvalid);
    }
}

TEST_CASE("wedges and smashes")
{
    const auto c = fixture::circle();
    for (int k = 1; k <= 4; ++k)
    {
        std::vector<const SimplicialSet*> xs(static_cast<std::size_t>(k), &c);
        auto w = wedge(xs);
        CHECK_NOTHROW(w.validate());
        CHECK(homology(w) == groups({Z, AbelianGroup::free(static_cast<std::size_t>(k))}));
        CHECK(reduced_homology(w)[1] == AbelianGroup::free(static_cast<std::size_t>(k)));
    }
    auto s2 = smash({&c, &c});
    CHECK_NOTHROW(s2.validate());
    CHECK(homology(s2) == groups({Z, O, Z}));
    auto s3 = smash({&c, &c, &c});
    CHECK(homology(s3) == groups({Z, O, O, Z}));
    CHECK(homology(s3) == homology(suspension(fixture::sphere2())));

    SimplicialSet unbased = c;
    unbased.set_basepoint(std::nullopt);
    CHECK_THROWS_AS(wedge({&c, &unbased}), MissingBasepoint);
    CHECK_THROWS_AS(smash({&unbased, &c}), MissingBasepoint);
    CHECK_THROWS_AS(suspension(unbased), MissingBasepoint);
}

TEST_CASE("suspension shifts reduced homology")
{
    CHECK(homology(suspension(fixture::sphere0())) == groups({Z, Z}));
    CHECK(homology(suspension(fixture::circle())) == groups({Z, O, Z}));
    CHECK(reduced_homology(suspension(fixture::torus())) == groups({O, O, AbelianGroup::free(2), Z}));
    for (const auto& x : {fixture::sphere0(), fixture::circle(), fixture::torus(), fixture::rp2(), fixture::sphere2()})
    {
        auto sx = suspension(x);
        CHECK_NOTHROW(sx.validate());
        CHECK(reduced_homology(sx) == reduced_homology(x).shifted(1));
    }
}

TEST_CASE("collapse and disjoint basepoint")
{
    const auto c = fixture::circle();
    SimplexMask none{{false, false}, {false, false}};
    auto plus = collapse(c, none);
    CHECK(plus.space.count(0) == 3);
    CHECK(homology(plus.space) == groups({AbelianGroup::free(2), Z}));
    CHECK(reduced_homology(plus.space) == homology(c));

    SimplexMask upper{{true, true}, {true, false}};
    auto quotient = collapse(c, upper);
    CHECK(quotient.space.f_vector() == std::vector<std::size_t>{1, 1});
    CHECK(homology(quotient.space) == groups({Z, Z}));

    SimplexMask not_closed{{false, false}, {true, false}};
    CHECK_THROWS_AS(collapse(c, not_closed), InvalidSimplicialSet);

    auto arc = subcomplex(c, upper);
    CHECK(arc.space.f_vector() == std::vector<std::size_t>{2, 1});
    CHECK(arc.space.basepoint() == 0);
}

TEST_CASE("identifiers are canonical across runs")
{
    const auto c = fixture::circle();
    auto p1 = product({&c, &c});
    auto p2 = product({&c, &c});
    CHECK(p1.space == p2.space);
    CHECK(p1.space.id(0, 0) == "(+1,+1)");
    CHECK(p1.space.id(2, 0).find("s0.") != std::string::npos);
}

TEST_CASE("JSON round trip")
{
    for (const auto& x : {fixture::circle(), fixture::rp2(), fixture::torus(), suspension(fixture::rp2())})
    {
        nlohmann::json j = x;
        CHECK(j.get<SimplicialSet>() == x);
        CHECK(j.at("dimensions") == x.f_vector());
    }
    const auto c = fixture::circle();
    auto j = to_json(c, fixture::conjugation(c));
    CHECK(j.at("action").at("permutations")[1][1] == nlohmann::json::array({1, 0}));

    nlohmann::json broken = fixture::rp2();
    broken["faces"][2][0][0][1] = 5;
    CHECK_THROWS_AS(broken.get<SimplicialSet>(), InvalidSimplicialSet);
}

TEST_CASE("product size guard")
{
    const auto c = fixture::circle();
    CHECK_THROWS_AS(product({&c, &c, &c}, 50), ResourceGuard);
}
