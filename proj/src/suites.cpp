#include "repspace/suites.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <random>

#include "repspace/catalog.hpp"
#include "repspace/counting.hpp"
#include "repspace/errors.hpp"
#include "repspace/smith.hpp"
#include "repspace/su2.hpp"

namespace repspace
{

namespace
{

double since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(IntMatrix a)
{
    const Index n = a.rows();
    if (n == 0)
        return 1;
    Integer sign = 1, previous = 1;
    for (Index k = 0; k + 1 < n; ++k)
    {
        if (a(k, k) == 0)
        {
            Index swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_smith_form(const IntMatrix& d)
{
    Integer last = 1;
    bool zero_seen = false;
    for (Index i = 0; i < d.rows(); ++i)
        for (Index j = 0; j < d.cols(); ++j)
        {
            if (i != j && d(i, j) != 0)
                return false;
            if (i != j)
                continue;
            const Integer& x = d(i, i);
            if (x < 0 || (zero_seen && x != 0))
                return false;
            if (x == 0)
                zero_seen = true;
            else if (x % last != 0)
                return false;
            else
                last = x;
        }
    return true;
}

std::string scientific(double x)
{
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << x;
    return os.str();
}

Report finish(Report r, std::chrono::steady_clock::time_point start)
{
    r.seconds = since(start);
    return r;
}

void append(Report& into, const Report& from)
{
    into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end());
}

} // namespace

Report suite_snf(long trials, std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 6), entry(-9, 9), shape(0, 3);
    long bad_product = 0, bad_unimodular = 0, bad_form = 0, bad_sparse = 0;
    for (long t = 0; t < trials; ++t)
    {
        const Index rows = size(rng), cols = size(rng);
        const int kind = shape(rng);
        IntMatrix m(rows, cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j)
                m(i, j) = kind == 0 && entry(rng) % 3 != 0 ? 0 : entry(rng);
        if (kind == 1 && rows > 1)
            m.row(rows - 1) = m.row(0) * Integer(2) + m.row(rows - 2) * Integer(3); // forces a rank drop
        const SmithDecomposition s = smith_normal_form(m);
        bad_product += !(s.U * m * s.V == s.D);
        bad_unimodular += abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1;
        bad_form += !is_smith_form(s.D);

        std::vector<Triplet> triplets;
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j)
                if (m(i, j) != 0)
                    triplets.push_back({i, j, m(i, j)});
        const MatrixInvariants sparse = matrix_invariants(SparseIntMatrix::from_triplets(rows, cols, triplets));
        std::vector<Integer> dense;
        for (const auto& d : elementary_divisors(m))
            if (d != 1)
                dense.push_back(d);
        bad_sparse += sparse.torsion != dense ||
                      sparse.rank != static_cast<Index>(elementary_divisors(m).size());
    }
    const std::string n = std::to_string(trials);
    Report r;
    r.title = "Smith normal form axioms";
    r.checks.push_back(Check::boolean("U M V = D on " + n + " matrices", bad_product == 0,
                                      std::to_string(bad_product) + " violations"));
    r.checks.push_back(Check::boolean("U and V unimodular", bad_unimodular == 0,
                                      std::to_string(bad_unimodular) + " violations"));
    r.checks.push_back(Check::boolean("D diagonal with d1 | d2 | ...", bad_form == 0,
                                      std::to_string(bad_form) + " violations"));
    r.checks.push_back(Check::boolean("sparse elimination agrees with dense Smith form", bad_sparse == 0,
                                      std::to_string(bad_sparse) + " disagreements"));
    return finish(r, start);
}

Report suite_simplicial(const HomologyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.title = "simplicial and chain-level properties";
    for (const auto& text : property_catalog())
    {
        const CatalogSpace s = build_space(text);
        const std::string name = s.descriptor.to_string();
        try
        {
            if (s.simplicial)
                s.simplicial->validate();
            const ChainComplex c = s.chains();
            c.validate();
            r.checks.push_back(Check::boolean("d∘d = 0 on " + name, true));
            const GradedGroup h = homology(c, options);
            const auto mod2 = homology_mod_p(c, 2);
            const auto predicted = universal_coefficients_mod_p(h, 2, c.top_degree());
            r.checks.push_back(Check::boolean("mod-2 universal coefficients on " + name, mod2 == predicted));
        }
        catch (const Error& e)
        {
            r.checks.push_back(Check::boolean("d∘d = 0 on " + name, false, e.what()));
        }
    }
    for (const char* text : {"sphere(n=0)", "circle()", "torus(n=2)", "rp2()", "sphere(n=2)"})
    {
        const SimplicialSet x = *build_space(text).simplicial;
        r.checks.push_back(Check::compare(std::string("suspension shift on ") + text, reduced_homology(x, options).shifted(1),
                            reduced_homology(suspension(x), options)));
    }
    return finish(r, start);
}

Report suite_homology_prop(int n_max)
{
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.title = "homology of the conjugation quotient";
    for (int n = 1; n <= n_max; ++n)
    {
        Report one = check_homology_prop(n);
        one.checks[0].name = "(S^1)^" + std::to_string(n) + "/Z2: engine vs closed form";
        append(r, one);
    }
    return finish(r, start);
}

Report suite_rep_u()
{
    const auto start = std::chrono::steady_clock::now();
    Report r = check_rep_u_cohomology(2);
    const auto& groups = r.checks[0].actual.groups();
    r.checks.push_back(Check::boolean("no torsion", std::all_of(groups.begin(), groups.end(),
                                                                [](const AbelianGroup& g) { return g.is_free(); })));
    return finish(r, start);
}

Report suite_rep_sp()
{
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.title = "Rep(Z^2, Sp(m)) = CP^m";
    for (int m = 0; m <= 2; ++m)
    {
        Report one = check_rep_sp(m);
        one.checks[0].name = one.title;
        append(r, one);
    }
    return finish(r, start);
}

Report suite_splitting(int n_max, const HomologyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.title = "splitting identities";
    const std::pair<Family, int> families[] = {{Family::HomCircle, 5}, {Family::RepSU2, 4}, {Family::SpCircle, 3}};
    for (const auto& [family, limit] : families)
        for (int n = 1; n <= std::min(limit, n_max); ++n)
        {
            Report one = verify_splitting(family, n, 2, options);
            one.checks[0].name = family_name(family) + " n=" + std::to_string(n);
            append(r, one);
        }
    return finish(r, start);
}

Report suite_counts()
{
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.title = "counting formulas";
    bool c_ok = true, k_ok = true;
    for (int n = 1; n <= 20; ++n)
    {
        c_ok = c_ok && c_count(n) == c_via_recurrence(n);
        k_ok = k_ok && k_count(n) == k_via_recurrence(n);
    }
    r.checks.push_back(Check::boolean("C(n) closed form = recurrence, 1 <= n <= 20", c_ok));
    r.checks.push_back(Check::boolean("K(n) closed form = recurrence, 1 <= n <= 20", k_ok));
    auto spot = [&](const std::string& name, const Integer& got, long want) {
        r.checks.push_back(Check::boolean(name + " = " + std::to_string(want), got == want, "got " + got.str()));
    };
    spot("A(2)", a_count(2), 1);
    spot("A(3)", a_count(3), 7);
    spot("D(2)", d_count(2), 1);
    spot("D(3)", d_count(3), 14);
    spot("K(3)", k_count(3), 11);
    spot("N(2,1,2)", n_central_product(2, 1, 2), 2);
    spot("|T(3,Z/2)|", count_types(3, AbelianGroup::cyclic(2)), 8);
    const auto strata = strata_counts(3, AbelianGroup::cyclic(2));
    r.checks.push_back(Check::boolean("strata_counts(3, Z/2) = [4,3,0,1]",
                                      strata == std::vector<Integer>{4, 3, 0, 1}));
    return finish(r, start);
}

Report suite_su2(long runs, std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.title = "SU(2) and SO(3) numerics";
    for (int n = 2; n <= 4; ++n)
    {
        const long share = runs / 3 + (n - 2 < runs % 3 ? 1 : 0);
        const PsiReport p = verify_psi(n, share, seed + static_cast<std::uint64_t>(n));
        std::string detail = std::to_string(p.failures) + " of " + std::to_string(p.runs) + " runs failed (" +
                             std::to_string(p.type_mismatches) + " type mismatches, " +
                             std::to_string(p.failed_types.size()) + " unrealized types); max defect " +
                             scientific(p.max_commutator_defect);
        r.checks.push_back(Check::boolean("psi reproduces every C in T(" + std::to_string(n) + ",Z/2)",
                                          p.failures == 0, detail));
    }
    const So3Report s = verify_so3_invariance(4, runs, seed);
    r.checks.push_back(Check::boolean("classify_so3_tuple invariant under conjugation and lift signs",
                                      s.failures == 0,
                                      std::to_string(s.failures) + " of " + std::to_string(s.runs) + " runs failed"));
    return finish(r, start);
}

std::vector<std::string> suite_names()
{
    return {"snf", "simplicial", "homology-prop", "rep-u", "rep-sp", "splitting", "counts", "su2"};
}

Report run_suite(const std::string& name, std::uint64_t seed, const HomologyOptions& options)
{
    if (name == "snf")
        return suite_snf(1000, seed);
    if (name == "simplicial")
        return suite_simplicial(options);
    if (name == "homology-prop")
        return suite_homology_prop(4);
    if (name == "rep-u")
        return suite_rep_u();
    if (name == "rep-sp")
        return suite_rep_sp();
    if (name == "splitting")
        return suite_splitting(5, options);
    if (name == "counts")
        return suite_counts();
    if (name == "su2")
        return suite_su2(1000, seed);
    throw UnknownSpace("unknown suite '" + name + "'");
}

} // namespace repspace
