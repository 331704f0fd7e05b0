#include <doctest.h>

#include <filesystem>

#include "oracles/shuffle.hpp"
#include "repspace/catalog.hpp"
#include "repspace/counting.hpp"
#include "repspace/errors.hpp"
#include "repspace/smith.hpp"

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

GradedGroup rp_closed_form(int m)
{
    GradedGroup h;
    h.set(0, Z);
    for (int k = 1; k <= m; ++k)
        h.set(static_cast<std::size_t>(k), k % 2 == 1 ? (k == m ? Z : Z2) : O);
    return h;
}

// H_j(RP^m, RP^{k-1}) from the 1x1 boundary matrices of the full RP^m complex.
GradedGroup stunted_oracle(int m, int k)
{
    auto d = [](int j) {
        IntMatrix a(1, 1);
        a(0, 0) = j % 2 == 0 ? 2 : 0;
        return a;
    };
    GradedGroup h;
    for (int j = k; j <= m; ++j)
    {
        const IntMatrix in = j == k ? IntMatrix(0, 1) : d(j);
        const IntMatrix out = j == m ? IntMatrix(1, 0) : d(j + 1);
        h.set(static_cast<std::size_t>(j), homology_of_pair(in, out));
    }
    return h;
}

GradedGroup closed_form_quotient(int n)
{
    GradedGroup h;
    for (int i = 0; i <= n; i += 2)
        h.set(static_cast<std::size_t>(i),
              AbelianGroup(binomial(n, i).convert_to<std::size_t>(),
                           std::vector<Integer>(r_of(n, i).convert_to<std::size_t>(), 2)));
    return h;
}

std::vector<std::vector<std::size_t>> f_vectors(int copies, const SimplicialSet& x)
{
    return std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(copies), x.f_vector());
}

// Unreduced suspension of the sphere bundle S(n lambda) = S^2 x_{Z2} S^{n-1}, as reduced homology.
GradedGroup suspended_sphere_bundle(int n)
{
    const EquivariantSet base = antipodal_sphere(2);
    const EquivariantSet fibre = antipodal_sphere(n - 1);
    ProductSet p = product({&base.space, &fibre.space});
    const auto action = diagonal_action(p, {&base.action, &fibre.action});
    // The bundle is connected, so H~_{k+1} of its unreduced suspension is H~_k.
    return reduced_homology(quotient_by_action(p.space, action).space).shifted(1);
}

} // namespace

TEST_CASE("circle with conjugation")
{
    const auto c = circle_conj();
    CHECK(homology(c.space) == G({Z, Z}));
    CHECK(homology(quotient_by_action(c.space, c.action).space) == G({Z}));
    int fixed = 0;
    for (int v = 0; v < c.space.count(0); ++v)
        fixed += c.action.act(1, FormalSimplex::nondegenerate(0, v)) == FormalSimplex::nondegenerate(0, v);
    CHECK(fixed == 2);
    CHECK(c.space.id(0, *c.space.basepoint()) == "+1");
}

TEST_CASE("tori")
{
    CHECK(homology(torus(1).product.space) == G({Z, Z}));
    CHECK(homology(torus(3).product.space) == G({Z, Z.power(3), Z.power(3), Z}));
    for (int n = 1; n <= 5; ++n)
    {
        const auto b = homology(torus(n).product.space).betti_numbers();
        for (int k = 0; k <= n; ++k)
            CHECK(b[static_cast<std::size_t>(k)] == binomial(n, k));
    }
    const auto c = circle_conj().space;
    CHECK(torus(2).product.space.f_vector() == std::vector<std::size_t>{4, 12, 8});
    CHECK(torus(2).product.space.f_vector() == oracle::product_f_vector(f_vectors(2, c)));
    CHECK(torus(3).product.space.f_vector() == oracle::product_f_vector(f_vectors(3, c)));
    CHECK(min_torus(3).f_vector() == oracle::product_f_vector(f_vectors(3, minimal_circle())));
    CHECK_THROWS_AS(torus(7), ResourceGuard);
    CHECK_THROWS_AS(torus(0), UnknownSpace);
}

TEST_CASE("torus modulo conjugation")
{
    CHECK(homology(torus_conj_quotient(1)) == G({Z}));
    CHECK(homology(torus_conj_quotient(2)) == G({Z, O, Z}));
    CHECK(homology(torus_conj_quotient(3))[2] == AbelianGroup(3, {2}));
    for (int n = 1; n <= 4; ++n)
        CHECK(homology(torus_conj_quotient(n)) == closed_form_quotient(n));
}

TEST_CASE("smash factors")
{
    CHECK(reduced_homology(smash_factor(1)).is_trivial());
    CHECK(reduced_homology(smash_factor(2)) == G({O, O, Z}));
    // Splitting T^3/Z2 into 3 copies of factor 1, 3 of factor 2 and one of factor 3.
    const GradedGroup lhs = reduced_homology(torus_conj_quotient(3));
    const GradedGroup rhs = reduced_homology(smash_factor(1)).power(3) +
                            reduced_homology(smash_factor(2)).power(3) + reduced_homology(smash_factor(3));
    CHECK(lhs == rhs);
    CHECK(reduced_homology(smash_factor(3)) == G({O, O, Z2}));
}

TEST_CASE("symmetric products")
{
    CHECK(homology(sym_product(rp2(), 1)) == homology(rp2()));
    CHECK(homology(sym_product(min_torus(2), 1)) == homology(min_torus(2)));
    CHECK(homology(sym_product(min_torus(2), 2)) == G({Z, Z.power(2), Z.power(2), Z.power(2), Z}));
    CHECK(homology(sym_product(sphere(2), 2)) == G({Z, O, Z, O, Z}));
    CHECK(homology(sym_product(rp2(), 0)) == G({Z}));
    CHECK_THROWS_AS(sym_product(rp2(), 4), ResourceGuard);
}

TEST_CASE("symplectic representation spaces")
{
    CHECK(homology(rep_sp(2, 1)) == G({Z, O, Z}));
    CHECK(homology(rep_sp(2, 2)) == G({Z, O, Z, O, Z}));
    CHECK(homology(rep_sp(1, 1)) == G({Z}));
}

TEST_CASE("stunted projective spaces")
{
    CHECK(homology(stunted_projective(3, 0)) == G({Z, Z2, O, Z}));
    CHECK(reduced_homology(stunted_projective(2, 2)) == G({O, O, Z}));
    CHECK(reduced_homology(stunted_projective(4, 2)) == G({O, O, Z, Z2}));
    for (int m = 0; m <= 6; ++m)
    {
        CHECK(homology(stunted_projective(m, 0)) == rp_closed_form(m));
        CHECK(homology(real_projective(m)) == stunted_oracle(m, 0));
        for (int k = 1; k <= m; ++k)
        {
            CAPTURE(m);
            CAPTURE(k);
            CHECK(reduced_homology(stunted_projective(m, k)) == stunted_oracle(m, k));
        }
    }
    CHECK_THROWS_AS(stunted_projective(2, 3), UnknownSpace);
    CHECK_THROWS_AS(stunted_projective(65, 1), ResourceGuard);
}

TEST_CASE("Thom spaces and the SU(2) factor")
{
    CHECK(homology(thom_space(0)) == G({Z.power(2), Z2}));
    CHECK(homology(thom_space_su2_factor(0)) == homology(thom_space(0)));
    CHECK(reduced_homology(thom_space_su2_factor(1)) == G({O, Z2, O, Z}));
    for (int n = 2; n <= 8; ++n)
    {
        CAPTURE(n);
        const auto h = reduced_homology(thom_space_su2_factor(n));
        CHECK(h[0].is_trivial());
        CHECK(h[1].is_trivial());
        CHECK_NOTHROW(thom_space_su2_factor(n).validate());
    }
    CHECK(reduced_homology(thom_space_su2_factor(2)) == G({O, O, Z, Z2}));
}

TEST_CASE("zero-section cofiber agrees with the suspended sphere bundle")
{
    for (int n = 2; n <= 3; ++n)
    {
        CAPTURE(n);
        CHECK(reduced_homology(thom_space_su2_factor(n)) == suspended_sphere_bundle(n));
    }
}

TEST_CASE("antipodal spheres")
{
    for (int n = 0; n <= 3; ++n)
    {
        const auto s = antipodal_sphere(n);
        CHECK_NOTHROW(s.action.validate(s.space));
        GradedGroup sn;
        sn.set(0, n == 0 ? Z.power(2) : Z);
        if (n > 0)
            sn.set(static_cast<std::size_t>(n), Z);
        CHECK(homology(s.space) == sn);
        CHECK(homology(quotient_by_action(s.space, s.action).space) == rp_closed_form(n));
    }
}

TEST_CASE("quaternionic lens space")
{
    const auto h = lens_q8();
    CHECK(h == G({Z, AbelianGroup({}, {2, 2}), O, Z}));
    CHECK(h[1] == abelianization(FiniteGroup::quaternion_q8()));
}

TEST_CASE("descriptor grammar")
{
    CHECK(parse_descriptor("torus_conj_quotient(n=3)").to_string() == "torus_conj_quotient(n=3)");
    CHECK(parse_descriptor(" torus_conj_quotient ( n = 3 ) ").to_string() == "torus_conj_quotient(n=3)");
    CHECK(parse_descriptor("stunted_projective(k=2,m=4)").to_string() == "stunted_projective(m=4,k=2)");
    CHECK(parse_descriptor("rep_sp(n=2,m=2)").to_string() == "sym_product(space=torus_conj_quotient(n=2),m=2)");
    CHECK(parse_descriptor("rep_u(m=2,n=3)").to_string() == "sym_product(space=min_torus(n=3),m=2)");
    CHECK(parse_descriptor("circle").to_string() == "sphere(n=1)");
    CHECK(parse_descriptor("lens_q8()").to_string() == "lens_q8()");
    CHECK(parse_descriptor("suspension(space=rep_sp(n=1,m=1))").to_string() ==
          "suspension(space=sym_product(space=torus_conj_quotient(n=1),m=1))");
    CHECK(parse_descriptor("torus(n=2)").to_json() ==
          nlohmann::json{{"name", "torus"}, {"args", {{"n", 2}}}});

    for (const char* bad : {"", "torus", "torus(n=)", "torus(n=2", "torus(n=2,n=3)", "torus(m=2)", "klein()",
                            "torus(n=2)x", "sym_product(space=3,m=2)", "sym_product(space=torus(n=1))",
                            "torus(n=99999999999999999999)"})
    {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_descriptor(bad), UnknownSpace);
    }
    CHECK_THROWS_AS(build_space("torus(n=9)"), ResourceGuard);
    CHECK_THROWS_AS(build_space("torus(n=-1)"), UnknownSpace);
    CHECK_THROWS_AS(build_space("sym_product(space=thom_space(n=2),m=2)"), UnknownSpace);
    CHECK_FALSE(descriptor_help().empty());
}

TEST_CASE("catalog homology and caching")
{
    CHECK(catalog_homology(build_space("rep_sp(n=2,m=2)")) == G({Z, O, Z, O, Z}));
    CHECK(catalog_homology(build_space("lens_q8()")) == lens_q8());
    CHECK(catalog_homology(build_space("wedge(space=circle(),k=3)")) == G({Z, Z.power(3)}));
    CHECK(catalog_homology(build_space("suspension(space=rp2())")) == G({Z, O, Z2}));
    CHECK_THROWS_AS(build_space("lens_q8()").chains(), Unsupported);

    const auto root = std::filesystem::temp_directory_path() / "repspace-catalog-test";
    std::filesystem::remove_all(root);
    HomologyCache cache(root);
    bool hit = true;
    const auto first = catalog_homology(build_space("torus_conj_quotient(n=3)"), &cache, {}, &hit);
    CHECK_FALSE(hit);
    const auto second = catalog_homology(build_space("torus_conj_quotient( n=3 )"), &cache, {}, &hit);
    CHECK(hit);
    CHECK(first == second);
    catalog_homology(build_space("rep_u(n=2,m=2)"), &cache, {}, &hit);
    CHECK_FALSE(hit);
    catalog_homology(build_space("sym_product(space=min_torus(n=2),m=2)"), &cache, {}, &hit);
    CHECK(hit);
    std::filesystem::remove_all(root);
}

TEST_CASE("every property-catalog space builds and passes the chain checks")
{
    for (const auto& d : property_catalog())
    {
        CAPTURE(d);
        const CatalogSpace s = build_space(d);
        if (s.simplicial)
            CHECK_NOTHROW(s.simplicial->validate());
        CHECK_NOTHROW(s.chains().validate());
        const auto h = catalog_homology(s);
        CHECK(h.size() >= 1);
        CHECK(s.chains().euler_characteristic() == [&] {
            long long chi = 0;
            for (std::size_t k = 0; k < h.size(); ++k)
                chi += (k % 2 ? -1 : 1) * static_cast<long long>(h[k].free_rank());
            return chi;
        }());
    }
}
