#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "repspace/abelian_group.hpp"
#include "repspace/homology.hpp"
#include "repspace/simplicial_set.hpp"

namespace repspace
{

// ---------------------------------------------------------------------------
// Simplicial models

/// Simplicial set with a finite group action.
struct EquivariantSet
{
    SimplicialSet space;
    SimplicialAction action;
};

/// 2-gon circle (vertices +1, -1; edges upper, lower) with complex conjugation.
EquivariantSet circle_conj();
/// One vertex, one edge.
SimplicialSet minimal_circle();
/// S^0 for n = 0, otherwise Delta^n / boundary.
SimplicialSet sphere(int n);
/// One vertex, one edge a, one triangle with faces (a, s0 v, a).
SimplicialSet rp2();

struct Torus
{
    ProductSet product;
    SimplicialAction conjugation;
};

/// n-fold product of circle_conj with the diagonal involution; 1 <= n <= 6.
Torus torus(int n);
/// (S^1)^n on the one-vertex circle; 0 <= n <= 6.
SimplicialSet min_torus(int n);
/// T^n modulo diagonal conjugation.
SimplicialSet torus_conj_quotient(int n);
/// T^{∧n} / Z2 with the induced involution.
SimplicialSet smash_factor(int n);
/// X^m / Σ_m; m <= 3.
SimplicialSet sym_product(const SimplicialSet& x, int m);
/// SP^m(T^n/Z2).
SimplicialSet rep_sp(int n, int m);
/// SP^m(T^n) / S^1(SP^m(T^n)), collapsing m-point configurations with a full basepoint column.
SimplicialSet sym_product_factor(int n, int m);

/// Sign-vector poset nerve: barycentric subdivision of the boundary of the (n+1)-cross-polytope.
EquivariantSet antipodal_sphere(int n);

// ---------------------------------------------------------------------------
// Cellular models

/// RP^m / RP^{k-1}: a basepoint 0-cell and cells in k..m; k = 0 gives RP^m itself.
ChainComplex stunted_projective(int m, int k);
ChainComplex real_projective(int n);
/// (RP^2)^{nλ} as RP^{n+2}/RP^{n-1}; RP^2 with a disjoint basepoint for n = 0.
ChainComplex thom_space(int n);
/// The Thom space modulo its zero section for n >= 2 (mapping cone); thom_space(n) below that.
ChainComplex thom_space_su2_factor(int n);

/// H_*(S^3/Q8) with degree 1 from the abelianization of Q8.
GradedGroup lens_q8();

// ---------------------------------------------------------------------------
// Descriptors

/**
 * Parsed space descriptor: name(key=value,...) where a value is an integer
 * or another descriptor. Canonical form lists keys in the catalog's declared
 * order and resolves aliases.
 */
struct Descriptor
{
    std::string name;
    std::vector<std::pair<std::string, std::variant<long, std::shared_ptr<Descriptor>>>> args;

    long integer(const std::string& key) const;
    const Descriptor& space(const std::string& key) const;
    std::string to_string() const;
    nlohmann::json to_json() const;
};

/// Throws UnknownSpace on syntax errors, unknown names or bad arguments.
Descriptor parse_descriptor(const std::string& text);
/// Canonical form: aliases expanded, argument order normalized.
Descriptor canonical(const Descriptor& d);

/// Catalog entry after construction.
struct CatalogSpace
{
    Descriptor descriptor;
    std::optional<SimplicialSet> simplicial;
    std::optional<ChainComplex> cellular;
    std::optional<GradedGroup> fixed;

    /// Chains of the simplicial or cellular model. Throws Unsupported for fixed data.
    ChainComplex chains() const;
};

/// Builds the space; throws UnknownSpace or ResourceGuard.
CatalogSpace build_space(const Descriptor& d);
CatalogSpace build_space(const std::string& text);

/// Homology of a catalog space, through the cache when one is given.
GradedGroup catalog_homology(const CatalogSpace& s, const HomologyCache* cache = nullptr,
                             const HomologyOptions& options = {}, bool* cache_hit = nullptr);

/// Grammar summary for --help.
std::string descriptor_help();

/// Descriptors of the small catalog spaces used for global property checks.
std::vector<std::string> property_catalog();

} // namespace repspace
