#include "repspace/splitting.hpp"

#include <chrono>
#include <sstream>

#include "repspace/catalog.hpp"
#include "repspace/counting.hpp"
#include "repspace/errors.hpp"

namespace repspace
{

namespace
{

class Stopwatch
{
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::size_t binom(int n, int r)
{
    return binomial(n, r).convert_to<std::size_t>();
}

// Smash of r 2-gon circles with no quotient: T^(smash r), a model of S^r.
SimplicialSet plain_smash(int r)
{
    static const EquivariantSet circle = circle_conj();
    std::vector<const SimplicialSet*> factors(static_cast<std::size_t>(r), &circle.space);
    return smash(product(factors), factors).space;
}

} // namespace

bool Report::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

nlohmann::json Report::to_json() const
{
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : checks)
    {
        nlohmann::json j = {{"name", c.name}, {"passed", c.passed()}};
        if (c.verdict)
            j["detail"] = c.detail;
        else
        {
            j["expected"] = c.expected;
            j["actual"] = c.actual;
        }
        list.push_back(std::move(j));
    }
    return {{"title", title}, {"passed", passed()}, {"seconds", seconds}, {"checks", list}};
}

std::string Report::to_table() const
{
    std::ostringstream out;
    out << title << '\n';
    for (const auto& c : checks)
    {
        out << "  " << (c.passed() ? "PASS" : "FAIL") << "  " << c.name << '\n';
        if (c.verdict && !c.detail.empty())
            out << "        " << c.detail << '\n';
        else if (!c.verdict && !c.passed())
            out << "        expected " << c.expected << "\n        actual   " << c.actual << '\n';
    }
    return out.str();
}

Family parse_family(const std::string& name)
{
    if (name == "hom_circle")
        return Family::HomCircle;
    if (name == "rep_su2")
        return Family::RepSU2;
    if (name == "sp_circle")
        return Family::SpCircle;
    throw UnknownSpace("unknown splitting family '" + name + "' (hom_circle, rep_su2, sp_circle)");
}

std::string family_name(Family f, int m)
{
    switch (f)
    {
    case Family::HomCircle:
        return "hom_circle";
    case Family::RepSU2:
        return "rep_su2";
    case Family::SpCircle:
        return "sp_circle(" + std::to_string(m) + ")";
    }
    return {};
}

Report verify_splitting(Family family, int n, int m, const HomologyOptions& options)
{
    const int limit = family == Family::HomCircle ? 5 : family == Family::RepSU2 ? 4 : 3;
    if (n < 1)
        throw Unsupported("splitting needs n >= 1");
    if (n > limit)
        throw ResourceGuard(family_name(family, m) + " is limited to n <= " + std::to_string(limit));
    if (family == Family::SpCircle && (m < 1 || m > 3))
        throw ResourceGuard("sp_circle supports 1 <= m <= 3");

    const Stopwatch clock;
    auto total = [&]() -> SimplicialSet {
        switch (family)
        {
        case Family::HomCircle:
            return torus(n).product.space;
        case Family::RepSU2:
            return torus_conj_quotient(n);
        case Family::SpCircle:
            break;
        }
        return sym_product(min_torus(n), m);
    };
    auto factor = [&](int r) -> SimplicialSet {
        switch (family)
        {
        case Family::HomCircle:
            return plain_smash(r);
        case Family::RepSU2:
            return smash_factor(r);
        case Family::SpCircle:
            break;
        }
        return sym_product_factor(r, m);
    };

    std::vector<std::pair<std::size_t, GradedGroup>> parts;
    for (int r = 1; r <= n; ++r)
        parts.emplace_back(binom(n, r), reduced_homology(factor(r), options));

    Report report;
    report.title = "splitting " + family_name(family, m) + " n=" + std::to_string(n);
    report.checks.push_back(Check::compare("H~(B_" + std::to_string(n) + ") = sum_r binom(" + std::to_string(n) + ",r) H~(factor_r)",
                             poincare_assembly(parts), reduced_homology(total(), options)));
    report.seconds = clock.seconds();
    return report;
}

std::vector<SimplicialSet> degeneracy_filtration(int n)
{
    static const EquivariantSet circle = circle_conj();
    const Torus t = torus(n);
    std::vector<const SimplicialSet*> factors(static_cast<std::size_t>(n), &circle.space);
    std::vector<SimplicialSet> out;
    out.push_back(t.product.space);
    for (int r = 1; r <= n; ++r)
        out.push_back(subcomplex(t.product.space, basepoint_coordinate_mask(t.product, factors, r)).space);
    return out;
}

SimplicialSet filtration_layer(int n, int r)
{
    static const EquivariantSet circle = circle_conj();
    if (r < 0 || r > n)
        throw Unsupported("filtration layer needs 0 <= r <= n");
    const Torus t = torus(n);
    std::vector<const SimplicialSet*> factors(static_cast<std::size_t>(n), &circle.space);
    const CollapseSet layer = r == 0 ? CollapseSet{t.product.space, {}}
                                     : subcomplex(t.product.space, basepoint_coordinate_mask(t.product, factors, r));
    if (r == n)
        return layer.space;
    const SimplexMask above = basepoint_coordinate_mask(t.product, factors, r + 1);

    // Pull the mask of S^{r+1} back to the simplices of S^r.
    SimplexMask pulled(static_cast<std::size_t>(layer.space.dimension() + 1));
    for (int k = 0; k <= layer.space.dimension(); ++k)
        pulled[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(layer.space.count(k)), false);
    for (int k = 0; k <= t.product.space.dimension(); ++k)
        for (int s = 0; s < static_cast<int>(t.product.space.count(k)); ++s)
        {
            const int image = r == 0 ? s : layer.index_map[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
            if (image >= 0 && above[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)])
                pulled[static_cast<std::size_t>(k)][static_cast<std::size_t>(image)] = true;
        }
    return collapse(layer.space, pulled).space;
}

GradedGroup poincare_assembly(const std::vector<std::pair<std::size_t, GradedGroup>>& parts)
{
    GradedGroup sum;
    for (const auto& [multiplicity, h] : parts)
        sum += h.power(multiplicity);
    return sum;
}

GradedGroup plus_basepoint(const GradedGroup& h)
{
    return h;
}

RankOne parse_rank_one(const std::string& name)
{
    if (name == "S1")
        return RankOne::S1;
    if (name == "SU2")
        return RankOne::SU2;
    if (name == "SO3")
        return RankOne::SO3;
    if (name == "B_SU2_Z2")
        return RankOne::B_SU2_Z2;
    throw Unsupported("unknown rank-one group '" + name + "' (S1, SU2, SO3, B_SU2_Z2)");
}

CatalogEntry rank_one_catalog(RankOne group, int n)
{
    if (n < 1 || n > 60)
        throw Unsupported("rank-one factors are tabulated for 1 <= n <= 60");
    const std::string ns = std::to_string(n);
    auto reduced_sphere = [](int d) {
        GradedGroup h;
        h.set(static_cast<std::size_t>(d), AbelianGroup::free(1));
        return h;
    };
    // S^n / Sigma_2 with tau(x_0, ..., x_n) = (x_0, -x_1, ..., -x_n) is the smash factor.
    auto conj_sphere = [&]() -> std::optional<GradedGroup> {
        if (n > 6)
            return std::nullopt;
        return reduced_homology(smash_factor(n));
    };
    auto with_points = [&](const Integer& count) -> std::optional<GradedGroup> {
        auto h = conj_sphere();
        if (h)
            *h += GradedGroup({AbelianGroup::free(count.convert_to<std::size_t>())});
        return h;
    };
    const GradedGroup rp3 = homology(real_projective(3));

    CatalogEntry e;
    switch (group)
    {
    case RankOne::S1:
        e.description = "S^" + ns;
        e.reduced = reduced_sphere(n);
        e.modulo_conjugation = e.reduced;
        return e;
    case RankOne::SU2:
        e.modulo_conjugation = conj_sphere();
        if (n == 1)
        {
            e.description = "S^3";
            e.reduced = reduced_sphere(3);
            return e;
        }
        e.description = "(RP^2)^{" + ns + "λ} / s(RP^2)";
        e.reduced = reduced_homology(thom_space_su2_factor(n));
        return e;
    case RankOne::SO3:
    {
        const Integer c = c_count(n);
        e.modulo_conjugation = with_points(c);
        if (n == 1)
        {
            e.description = "RP^3";
            e.reduced = reduce(rp3);
            return e;
        }
        e.description = "(RP^2)^{" + ns + "λ} ∨ " + c.str() + " x (S^3/Q8)_+";
        e.reduced = poincare_assembly({{1, reduced_homology(thom_space(n))},
                                       {c.convert_to<std::size_t>(), plus_basepoint(lens_q8())}});
        return e;
    }
    case RankOne::B_SU2_Z2:
    {
        if (n == 1)
        {
            e.description = "S^3";
            e.reduced = reduced_sphere(3);
            e.modulo_conjugation = conj_sphere();
            return e;
        }
        const Integer k = k_count(n);
        e.modulo_conjugation = with_points(k);
        e.description = k.str() + " x RP^3_+ ∨ (RP^2)^{" + ns + "λ} / s(RP^2)";
        e.reduced = poincare_assembly({{k.convert_to<std::size_t>(), plus_basepoint(rp3)},
                                       {1, reduced_homology(thom_space_su2_factor(n))}});
        return e;
    }
    }
    throw Unsupported("unknown rank-one group");
}

Report check_homology_prop(int n)
{
    if (n < 1 || n > 6)
        throw ResourceGuard("homology-prop is limited to 1 <= n <= 6");
    const Stopwatch clock;
    GradedGroup expected;
    for (int i = 0; i <= n; i += 2)
        expected.set(static_cast<std::size_t>(i),
                     AbelianGroup(binom(n, i), std::vector<Integer>(r_of(n, i).convert_to<std::size_t>(), 2)));
    Report report;
    report.title = "homology of (S^1)^" + std::to_string(n) + " / Z2";
    report.checks.push_back(Check::compare("engine vs closed form", expected, homology(torus_conj_quotient(n))));
    report.seconds = clock.seconds();
    return report;
}

Report check_rep_u_cohomology(int m)
{
    if (m < 1 || m > 3)
        throw ResourceGuard("rep-u is limited to 1 <= m <= 3");
    const Stopwatch clock;
    GradedGroup expected;
    expected.set(0, AbelianGroup::free(1));
    for (int i = 1; i < 2 * m; ++i)
        expected.set(static_cast<std::size_t>(i), AbelianGroup::free(2));
    expected.set(static_cast<std::size_t>(2 * m), AbelianGroup::free(1));
    // Torsion-free homology, so cohomology has the same ranks by universal coefficients.
    Report report;
    report.title = "Rep(Z^2, U(" + std::to_string(m) + ")) = SP^" + std::to_string(m) + "(T^2)";
    report.checks.push_back(Check::compare("homology of SP^m(T^2)", expected, homology(sym_product(min_torus(2), m))));
    report.seconds = clock.seconds();
    return report;
}

Report check_rep_sp(int m)
{
    if (m < 0 || m > 2)
        throw ResourceGuard("rep-sp is limited to 0 <= m <= 2");
    const Stopwatch clock;
    GradedGroup expected;
    for (int i = 0; i <= m; ++i)
        expected.set(static_cast<std::size_t>(2 * i), AbelianGroup::free(1));
    Report report;
    report.title = "Rep(Z^2, Sp(" + std::to_string(m) + ")) = CP^" + std::to_string(m);
    report.checks.push_back(Check::compare("homology of SP^m(T^2/Z2)", expected, homology(rep_sp(2, m))));
    report.seconds = clock.seconds();
    return report;
}

} // namespace repspace
