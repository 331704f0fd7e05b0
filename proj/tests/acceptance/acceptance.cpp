// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "repspace/catalog.hpp"
#include "repspace/counting.hpp"
#include "repspace/homology.hpp"
#include "repspace/suites.hpp"

using namespace repspace;

namespace
{

const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup O;

AbelianGroup z2(std::size_t k)
{
    return AbelianGroup(0, std::vector<Integer>(k, 2));
}

GradedGroup G(std::vector<AbelianGroup> v)
{
    return GradedGroup(std::move(v));
}

struct Criterion
{
    int id;
    std::string summary;
    double limit_seconds;
    std::function<Report()> run;
};

// Frozen by hand: H_2i = Z^C(n,2i) + (Z/2)^r, r = sum of C(n,t) over t < n - 2i (H_0 carries no torsion).
Report criterion_homology_prop()
{
    const GradedGroup frozen[] = {
        G({Z}),
        G({Z, O, Z}),
        G({Z, O, Z.power(3) + z2(1)}),
        G({Z, O, Z.power(6) + z2(5), O, Z}),
    };
    Report r = suite_homology_prop(4);
    for (int n = 1; n <= 4; ++n)
        r.checks.push_back(Check::compare("frozen table n=" + std::to_string(n), frozen[n - 1],
                                          homology(torus_conj_quotient(n))));
    const GradedGroup h4 = homology(torus_conj_quotient(4));
    r.checks.push_back(Check::boolean("n=4: H_2 = Z^6 + (Z/2)^5 and H_4 = Z",
                                      h4[2] == Z.power(6) + z2(5) && h4[4] == Z));
    return r;
}

Report criterion_rep_u_sp()
{
    Report r;
    const GradedGroup sp2 = homology(sym_product(min_torus(2), 2));
    bool free = true;
    for (const auto& g : sp2.groups())
        free = free && g.is_free();
    r.checks.push_back(Check::boolean("SP^2(T^2) Betti numbers (1,2,2,2,1)",
                                      sp2.betti_numbers() == std::vector<std::size_t>{1, 2, 2, 2, 1}));
    r.checks.push_back(Check::boolean("SP^2(T^2) has no torsion", free));
    r.checks.push_back(Check::compare("Rep(Z^2,Sp(1)) = CP^1", G({Z, O, Z}), homology(rep_sp(2, 1))));
    r.checks.push_back(Check::compare("Rep(Z^2,Sp(2)) = CP^2", G({Z, O, Z, O, Z}), homology(rep_sp(2, 2))));
    return r;
}

Report criterion_em()
{
    Report r;
    for (int n = 1; n <= 4; ++n)
    {
        const GradedGroup engine = homology(torus_conj_quotient(n));
        const GradedGroup em = em_decomposition(EmTarget::Sp, n);
        GradedGroup a, b;
        for (std::size_t i = 2; i <= static_cast<std::size_t>(n); i += 2)
        {
            a.set(i, em[i]);
            b.set(i, engine[i]);
        }
        r.checks.push_back(Check::compare("even degrees, n=" + std::to_string(n), a, b));
    }
    return r;
}

Report criterion_properties(std::uint64_t seed)
{
    Report r = suite_snf(1000, seed);
    const Report s = suite_simplicial();
    r.checks.insert(r.checks.end(), s.checks.begin(), s.checks.end());
    return r;
}

} // namespace

int main()
{
    const std::uint64_t seed = 42;
    const Criterion criteria[] = {
        {1, "(S^1)^n/Z2 homology equals the closed form, n = 1..4", 300, criterion_homology_prop},
        {2, "SP^2(T^2) ranks (1,2,2,2,1) torsion-free; Rep(Z^2,Sp(m)) = CP^m, m = 1,2", 120, criterion_rep_u_sp},
        {3, "splitting: hom_circle n<=5, rep_su2 n<=4, sp_circle(2) n<=3", 600, [] { return suite_splitting(5); }},
        {4, "C, K recurrences n<=20 and count spot values", 1, suite_counts},
        {5, "psi realizes every C in T(n,Z/2), n = 2,3,4, 1000 runs, defect < 1e-9; SO(3) invariance, 1000 runs",
         60, [seed] { return suite_su2(1000, seed); }},
        {6, "EM table for Sp equals engine H_2i((S^1)^n/Z2), n <= 4", 60, criterion_em},
        {7, "SNF axioms (1000 matrices), d∘d = 0, suspension shift, mod-2 UCT", 300,
         [seed] { return criterion_properties(seed); }},
    };

    int failed = 0;
    for (const auto& c : criteria)
    {
        const auto start = std::chrono::steady_clock::now();
        Report report;
        std::string error;
        try
        {
            report = c.run();
        }
        catch (const std::exception& e)
        {
            error = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= c.limit_seconds;
        const bool ok = error.empty() && report.passed() && in_time;
        failed += !ok;

        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", seconds, c.limit_seconds);
        std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.summary << " (" << timing << ")\n";
        if (!error.empty())
            std::cout << "        error: " << error << '\n';
        if (!in_time)
            std::cout << "        over the time limit\n";
        for (const auto& check : report.checks)
            if (!check.passed())
            {
                std::cout << "        failed: " << check.name;
                if (!check.detail.empty())
                    std::cout << " (" << check.detail << ')';
                else
                    std::cout << " (expected " << check.expected.to_string() << ", got " << check.actual.to_string()
                              << ')';
                std::cout << '\n';
            }
    }
    std::cout << (failed ? std::to_string(failed) + " of 7 criteria failed" : std::string("all 7 criteria passed"))
              << '\n';
    return failed ? 1 : 0;
}
