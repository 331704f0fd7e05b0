#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "repspace/finite_group.hpp"

namespace repspace
{

/**
 * A possibly degenerate simplex s_{j1} ... s_{jp} b with j1 > ... > jp and
 * b nondegenerate (Eilenberg-Zilber normal form).
 *
 * The word is stored as the bit set {j1, ..., jp}; equivalently the simplex
 * is the pullback of b along the surjection [dim] -> [base_dim] that
 * identifies t and t+1 exactly for the bits t.
 */
struct FormalSimplex
{
    std::uint32_t degeneracies = 0;
    int base_dim = 0;
    int base = 0;

    int dim() const { return base_dim + std::popcount(degeneracies); }
    bool is_degenerate() const { return degeneracies != 0; }

    static FormalSimplex nondegenerate(int dim, int index) { return {0, dim, index}; }
    /// s_{dim-1} ... s_0 of a vertex.
    static FormalSimplex degenerate_vertex(int dim, int vertex)
    {
        return {dim == 0 ? 0u : (std::uint32_t{1} << dim) - 1, 0, vertex};
    }

    /// Degeneracy indices in normal-form (decreasing) order.
    std::vector<int> word() const;

    friend auto operator<=>(const FormalSimplex&, const FormalSimplex&) = default;
};

/**
 * Finite simplicial set presented by its nondegenerate simplices.
 *
 * Simplices of dimension k are numbered 0..count(k)-1; each one with k > 0
 * stores its k+1 faces as FormalSimplex values. Identifiers are canonical
 * strings derived from how the simplex was constructed.
 */
class SimplicialSet
{
public:
    SimplicialSet() = default;

    /// Appends a nondegenerate simplex; faces.size() must be k+1 (or 0 for k = 0).
    int add_simplex(int k, std::string id, std::vector<FormalSimplex> faces = {});
    void set_basepoint(std::optional<int> vertex) { basepoint_ = vertex; }

    int dimension() const { return static_cast<int>(ids_.size()) - 1; }
    std::size_t count(int k) const;
    std::size_t total_count() const;
    std::vector<std::size_t> f_vector() const;
    const std::string& id(int k, int s) const { return ids_[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)]; }
    std::optional<int> basepoint() const { return basepoint_; }
    bool is_based() const { return basepoint_.has_value(); }

    /// i-th face of a nondegenerate k-simplex.
    const FormalSimplex& face(int k, int s, int i) const
    {
        return faces_[static_cast<std::size_t>(k)][static_cast<std::size_t>(s) * static_cast<std::size_t>(k + 1) +
                                                   static_cast<std::size_t>(i)];
    }
    /// d_i of an arbitrary formal simplex.
    FormalSimplex face(const FormalSimplex& x, int i) const;
    static FormalSimplex degeneracy(const FormalSimplex& x, int j);

    /// References resolve and d_i d_j = d_{j-1} d_i for i < j on every generator.
    /// Throws InvalidSimplicialSet.
    void validate() const;

    friend bool operator==(const SimplicialSet&, const SimplicialSet&) = default;

private:
    std::vector<std::vector<std::string>> ids_;
    std::vector<std::vector<FormalSimplex>> faces_;
    std::optional<int> basepoint_;
};

/**
 * Action of a finite group by simplicial automorphisms: perm[g][k][s] is the
 * image of the nondegenerate k-simplex s under g.
 */
struct SimplicialAction
{
    FiniteGroup group;
    std::vector<std::vector<std::vector<int>>> perm;

    static SimplicialAction trivial(const SimplicialSet& x, FiniteGroup group = FiniteGroup::trivial());

    FormalSimplex act(int g, const FormalSimplex& x) const
    {
        return {x.degeneracies, x.base_dim,
                perm[static_cast<std::size_t>(g)][static_cast<std::size_t>(x.base_dim)][static_cast<std::size_t>(x.base)]};
    }

    /// Identity, composition law and compatibility with faces. Throws ActionInvalid.
    void validate(const SimplicialSet& x) const;
};

/// Per-dimension membership mask of a set of nondegenerate simplices.
using SimplexMask = std::vector<std::vector<bool>>;

/// Product together with the coordinates of every product simplex.
struct ProductSet
{
    SimplicialSet space;
    /// coordinates[k][s][f]: the f-th factor coordinate of simplex (k, s).
    std::vector<std::vector<std::vector<FormalSimplex>>> coordinates;
    /// Coordinate tuple key to simplex index, per dimension.
    std::vector<std::unordered_map<std::string, int>> index;
};

/// Result of collapsing a subcomplex to a point.
struct CollapseSet
{
    SimplicialSet space;
    /// index_map[k][s]: image of (k, s), -1 for simplices that were collapsed.
    std::vector<std::vector<int>> index_map;
};

struct QuotientSet
{
    SimplicialSet space;
    /// orbit_of[k][s]: the quotient simplex containing (k, s).
    std::vector<std::vector<int>> orbit_of;
    /// One representative per quotient simplex (the least index in its orbit).
    std::vector<std::vector<int>> representative;
};

/// Binary categorical product; nondegenerate simplices are shuffles.
SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y);
/// n-ary product, keeping coordinates. Throws ResourceGuard past max_simplices.
ProductSet product(const std::vector<const SimplicialSet*>& factors, std::size_t max_simplices = 4'000'000);

/// Action on a product obtained by transforming coordinate tuples in place.
template <typename CoordinateMap>
SimplicialAction induced_action(const ProductSet& p, const FiniteGroup& group, CoordinateMap&& map);

/// Diagonal action g(x_1, ..., x_n) = (g x_1, ..., g x_n).
SimplicialAction diagonal_action(const ProductSet& p, const std::vector<const SimplicialAction*>& factor_actions);
/// A permutation group on m blocks of `block` coordinates permuting the blocks.
SimplicialAction block_permutation_action(const ProductSet& p, const FiniteGroup& group, int block);

/// X / A for the subcomplex marked by `collapsed`; an empty subcomplex adds a disjoint basepoint.
CollapseSet collapse(const SimplicialSet& x, const SimplexMask& collapsed);
/// Action on X / A induced by an action on X preserving A.
SimplicialAction induced_action(const CollapseSet& c, const SimplicialAction& a);
/// The simplicial subset marked by mask (must be closed under faces).
CollapseSet subcomplex(const SimplicialSet& x, const SimplexMask& keep);

/// Orbit simplicial set X / G. Throws ActionInvalid.
QuotientSet quotient_by_action(const SimplicialSet& x, const SimplicialAction& a);

SimplicialSet disjoint_union(const std::vector<const SimplicialSet*>& xs);
/// Throws MissingBasepoint.
SimplicialSet wedge(const std::vector<const SimplicialSet*>& xs);
/// Product modulo the fat wedge. Throws MissingBasepoint.
CollapseSet smash(const ProductSet& p, const std::vector<const SimplicialSet*>& factors);
SimplicialSet smash(const std::vector<const SimplicialSet*>& xs);
/// Reduced suspension X ∧ S^1 with the one-vertex circle.
SimplicialSet suspension(const SimplicialSet& x);

/// Mask of product simplices with at least `at_least` coordinates at the factor basepoint.
SimplexMask basepoint_coordinate_mask(const ProductSet& p, const std::vector<const SimplicialSet*>& factors,
                                      int at_least = 1);

void to_json(nlohmann::json& j, const SimplicialSet& x);
void from_json(const nlohmann::json& j, SimplicialSet& x);
nlohmann::json to_json(const SimplicialSet& x, const SimplicialAction& a);

// ---------------------------------------------------------------------------

namespace detail
{
int lookup_product_simplex(const ProductSet& p, int k, const std::vector<FormalSimplex>& coords);
}

template <typename CoordinateMap>
SimplicialAction induced_action(const ProductSet& p, const FiniteGroup& group, CoordinateMap&& map)
{
    SimplicialAction a;
    a.group = group;
    a.perm.resize(static_cast<std::size_t>(group.order()));
    std::vector<FormalSimplex> coords;
    for (int g = 0; g < group.order(); ++g)
    {
        auto& per_dim = a.perm[static_cast<std::size_t>(g)];
        per_dim.resize(p.coordinates.size());
        for (std::size_t k = 0; k < p.coordinates.size(); ++k)
        {
            per_dim[k].resize(p.coordinates[k].size());
            for (std::size_t s = 0; s < p.coordinates[k].size(); ++s)
            {
                coords = p.coordinates[k][s];
                map(g, coords);
                per_dim[k][s] = detail::lookup_product_simplex(p, static_cast<int>(k), coords);
            }
        }
    }
    return a;
}

} // namespace repspace
