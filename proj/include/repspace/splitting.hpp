#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "repspace/abelian_group.hpp"
#include "repspace/homology.hpp"
#include "repspace/simplicial_set.hpp"

namespace repspace
{

/// One named check: a comparison of two graded groups, or a plain verdict with a detail line.
struct Check
{
    std::string name;
    GradedGroup expected;
    GradedGroup actual;
    std::optional<bool> verdict;
    std::string detail;

    bool passed() const { return verdict ? *verdict : expected == actual; }
    static Check compare(std::string name, GradedGroup expected, GradedGroup actual)
    {
        return {std::move(name), std::move(expected), std::move(actual), std::nullopt, {}};
    }
    static Check boolean(std::string name, bool ok, std::string detail = {})
    {
        return {std::move(name), {}, {}, ok, std::move(detail)};
    }
};

struct Report
{
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;

    bool passed() const;
    nlohmann::json to_json() const;
    std::string to_table() const;
};

enum class Family
{
    HomCircle, // T^n against wedges of T^(smash r)
    RepSU2,    // T^n / Z2 against smash_factor(r)
    SpCircle   // SP^m(T^n) against sym_product_factor(r, m)
};

/// Parses "hom_circle", "rep_su2" or "sp_circle"; throws UnknownSpace.
Family parse_family(const std::string& name);
std::string family_name(Family f, int m = 2);

/**
 * H~(B_n) against the sum over r of binom(n, r) copies of H~(factor_r), one
 * check for the whole graded group. Guards: n <= 5, 4 and 3 respectively.
 */
Report verify_splitting(Family family, int n, int m = 2, const HomologyOptions& options = {});

/// S^r(T^n) for r = 0..n: tuples with at least r basepoint coordinates (2-gon circle model).
std::vector<SimplicialSet> degeneracy_filtration(int n);

/// S^r(T^n) / S^{r+1}(T^n); its reduced homology is binom(n, r) copies of that of S^{n-r}.
SimplicialSet filtration_layer(int n, int r);

/// Direct sum with multiplicities; the reduced homology of a wedge.
GradedGroup poincare_assembly(const std::vector<std::pair<std::size_t, GradedGroup>>& parts);

/// H~(X_+) from H(X).
GradedGroup plus_basepoint(const GradedGroup& h);

enum class RankOne
{
    S1,
    SU2,
    SO3,
    B_SU2_Z2
};

RankOne parse_rank_one(const std::string& name);

struct CatalogEntry
{
    std::string description;
    /// Reduced homology of the stable factor Hom(Z^n, G) / S^1.
    GradedGroup reduced;
    /// Reduced homology of the factor for Rep(Z^n, G) = Hom / G, when the catalog has it.
    std::optional<GradedGroup> modulo_conjugation;
};

/// Stable factor for the rank-one group at level n. Throws Unsupported.
CatalogEntry rank_one_catalog(RankOne group, int n);

Report check_homology_prop(int n);
Report check_rep_u_cohomology(int m = 2);
Report check_rep_sp(int m);

} // namespace repspace
