#include "repspace/simplicial_set.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "repspace/errors.hpp"

namespace repspace
{

namespace
{

constexpr int kMaxDim = 30;
using MonotoneMap = std::array<int, kMaxDim + 2>;

// sigma(t) = t - #{j in J : j < t} for t = 0..dim.
void surjection(std::uint32_t degeneracies, int dim, MonotoneMap& sigma)
{
    int v = 0;
    for (int t = 0; t <= dim; ++t)
    {
        sigma[static_cast<std::size_t>(t)] = v;
        if (t < dim && !((degeneracies >> t) & 1u))
            ++v;
    }
}

// Degeneracy set of a surjection [dim] -> [m] given by its values.
std::uint32_t degeneracies_of(const MonotoneMap& map, int dim)
{
    std::uint32_t bits = 0;
    for (int t = 0; t < dim; ++t)
        if (map[static_cast<std::size_t>(t)] == map[static_cast<std::size_t>(t + 1)])
            bits |= std::uint32_t{1} << t;
    return bits;
}

// x = sigma_C^*(r): removes the common degeneracies C from x.
FormalSimplex strip(const FormalSimplex& x, std::uint32_t common)
{
    const int n = x.dim();
    MonotoneMap sx{}, sc{}, rho{};
    surjection(x.degeneracies, n, sx);
    surjection(common, n, sc);
    for (int t = 0; t <= n; ++t)
        rho[static_cast<std::size_t>(sc[static_cast<std::size_t>(t)])] = sx[static_cast<std::size_t>(t)];
    const int reduced = n - std::popcount(common);
    return {degeneracies_of(rho, reduced), x.base_dim, x.base};
}

std::string formal_name(const SimplicialSet& x, const FormalSimplex& f)
{
    std::string out;
    for (int j : f.word())
        out += "s" + std::to_string(j) + ".";
    return out + x.id(f.base_dim, f.base);
}

void append_key(std::string& key, const FormalSimplex& f)
{
    const char* p = reinterpret_cast<const char*>(&f.degeneracies);
    key.append(p, sizeof f.degeneracies);
    p = reinterpret_cast<const char*>(&f.base);
    key.append(p, sizeof f.base);
    key.push_back(static_cast<char>(f.base_dim));
}

std::string tuple_key(const std::vector<FormalSimplex>& coords)
{
    std::string key;
    key.reserve(coords.size() * 9);
    for (const auto& c : coords)
        append_key(key, c);
    return key;
}

} // namespace

std::vector<int> FormalSimplex::word() const
{
    std::vector<int> w;
    for (int j = 31; j >= 0; --j)
        if ((degeneracies >> j) & 1u)
            w.push_back(j);
    return w;
}

// ---------------------------------------------------------------------------
// SimplicialSet

int SimplicialSet::add_simplex(int k, std::string id, std::vector<FormalSimplex> faces)
{
    if (k < 0 || k > kMaxDim)
        throw InvalidSimplicialSet("dimension out of range");
    if (faces.size() != (k == 0 ? 0u : static_cast<std::size_t>(k + 1)))
        throw InvalidSimplicialSet("simplex " + id + " needs " + std::to_string(k + 1) + " faces");
    if (static_cast<int>(ids_.size()) <= k)
    {
        ids_.resize(static_cast<std::size_t>(k + 1));
        faces_.resize(static_cast<std::size_t>(k + 1));
    }
    auto& bucket = ids_[static_cast<std::size_t>(k)];
    bucket.push_back(std::move(id));
    auto& f = faces_[static_cast<std::size_t>(k)];
    f.insert(f.end(), faces.begin(), faces.end());
    return static_cast<int>(bucket.size()) - 1;
}

std::size_t SimplicialSet::count(int k) const
{
    return k >= 0 && k < static_cast<int>(ids_.size()) ? ids_[static_cast<std::size_t>(k)].size() : 0;
}

std::size_t SimplicialSet::total_count() const
{
    std::size_t n = 0;
    for (const auto& b : ids_)
        n += b.size();
    return n;
}

std::vector<std::size_t> SimplicialSet::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& b : ids_)
        f.push_back(b.size());
    return f;
}

FormalSimplex SimplicialSet::face(const FormalSimplex& x, int i) const
{
    const int k = x.dim();
    const int m = x.base_dim;
    MonotoneMap sigma{};
    surjection(x.degeneracies, k, sigma);
    const int v = sigma[static_cast<std::size_t>(i)];
    const bool missing = (i == 0 || sigma[static_cast<std::size_t>(i - 1)] != v) &&
                         (i == k || sigma[static_cast<std::size_t>(i + 1)] != v);

    MonotoneMap tau{};
    for (int t = 0; t < k; ++t)
        tau[static_cast<std::size_t>(t)] = sigma[static_cast<std::size_t>(t < i ? t : t + 1)];
    if (!missing)
        return {degeneracies_of(tau, k - 1), m, x.base};

    // sigma * delta_i = delta_v * tau'; the face of x is tau'^*(d_v base).
    const FormalSimplex& y = face(m, x.base, v);
    MonotoneMap rho{}, composite{};
    surjection(y.degeneracies, m - 1, rho);
    for (int t = 0; t < k; ++t)
    {
        int w = tau[static_cast<std::size_t>(t)];
        composite[static_cast<std::size_t>(t)] = rho[static_cast<std::size_t>(w > v ? w - 1 : w)];
    }
    return {degeneracies_of(composite, k - 1), y.base_dim, y.base};
}

FormalSimplex SimplicialSet::degeneracy(const FormalSimplex& x, int j)
{
    const int k = x.dim();
    MonotoneMap sigma{}, u{};
    surjection(x.degeneracies, k, sigma);
    for (int t = 0; t <= k + 1; ++t)
        u[static_cast<std::size_t>(t)] = sigma[static_cast<std::size_t>(t <= j ? t : t - 1)];
    return {degeneracies_of(u, k + 1), x.base_dim, x.base};
}

void SimplicialSet::validate() const
{
    if (basepoint_ && (*basepoint_ < 0 || static_cast<std::size_t>(*basepoint_) >= count(0)))
        throw InvalidSimplicialSet("basepoint is not a vertex");
    for (int k = 1; k <= dimension(); ++k)
        for (int s = 0; s < static_cast<int>(count(k)); ++s)
            for (int i = 0; i <= k; ++i)
            {
                const auto& f = face(k, s, i);
                if (f.dim() != k - 1 || f.base_dim < 0 || f.base_dim >= k || f.base < 0 ||
                    static_cast<std::size_t>(f.base) >= count(f.base_dim) ||
                    (f.degeneracies >> std::max(k - 1, 0)) != 0)
                    throw InvalidSimplicialSet("face " + std::to_string(i) + " of " + id(k, s) +
                                               " does not reference a simplex of dimension " + std::to_string(k - 1));
            }
    for (int k = 2; k <= dimension(); ++k)
        for (int s = 0; s < static_cast<int>(count(k)); ++s)
        {
            const auto x = FormalSimplex::nondegenerate(k, s);
            for (int j = 1; j <= k; ++j)
                for (int i = 0; i < j; ++i)
                    if (face(face(x, j), i) != face(face(x, i), j - 1))
                        throw InvalidSimplicialSet("simplicial identity d" + std::to_string(i) + " d" +
                                                   std::to_string(j) + " fails on " + id(k, s));
        }
}

// ---------------------------------------------------------------------------
// Actions

SimplicialAction SimplicialAction::trivial(const SimplicialSet& x, FiniteGroup group)
{
    SimplicialAction a;
    a.perm.resize(static_cast<std::size_t>(group.order()));
    for (auto& per_dim : a.perm)
    {
        per_dim.resize(static_cast<std::size_t>(x.dimension() + 1));
        for (int k = 0; k <= x.dimension(); ++k)
        {
            auto& p = per_dim[static_cast<std::size_t>(k)];
            p.resize(x.count(k));
            for (std::size_t s = 0; s < p.size(); ++s)
                p[s] = static_cast<int>(s);
        }
    }
    a.group = std::move(group);
    return a;
}

void SimplicialAction::validate(const SimplicialSet& x) const
{
    const int n = group.order();
    if (static_cast<int>(perm.size()) != n)
        throw ActionInvalid("one permutation family per group element is required");
    for (int g = 0; g < n; ++g)
    {
        const auto& per_dim = perm[static_cast<std::size_t>(g)];
        if (static_cast<int>(per_dim.size()) != x.dimension() + 1)
            throw ActionInvalid("permutations do not cover every dimension");
        for (int k = 0; k <= x.dimension(); ++k)
        {
            const auto& p = per_dim[static_cast<std::size_t>(k)];
            if (p.size() != x.count(k))
                throw ActionInvalid("permutation size differs from simplex count");
            std::vector<bool> hit(p.size(), false);
            for (std::size_t s = 0; s < p.size(); ++s)
            {
                if (p[s] < 0 || static_cast<std::size_t>(p[s]) >= p.size() || hit[static_cast<std::size_t>(p[s])])
                    throw ActionInvalid("element " + std::to_string(g) + " is not a bijection in dimension " +
                                        std::to_string(k));
                hit[static_cast<std::size_t>(p[s])] = true;
                if (g == group.identity() && p[s] != static_cast<int>(s))
                    throw ActionInvalid("identity element acts nontrivially");
            }
        }
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
        {
            const int gh = group.multiply(g, h);
            for (int k = 0; k <= x.dimension(); ++k)
                for (std::size_t s = 0; s < x.count(k); ++s)
                {
                    const auto& pk = [&](int e) -> const std::vector<int>& {
                        return perm[static_cast<std::size_t>(e)][static_cast<std::size_t>(k)];
                    };
                    if (pk(gh)[s] != pk(g)[static_cast<std::size_t>(pk(h)[s])])
                        throw ActionInvalid("composition law fails");
                }
        }
    for (int g = 0; g < n; ++g)
        for (int k = 1; k <= x.dimension(); ++k)
            for (int s = 0; s < static_cast<int>(x.count(k)); ++s)
            {
                const int gs = perm[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
                for (int i = 0; i <= k; ++i)
                    if (x.face(k, gs, i) != act(g, x.face(k, s, i)))
                        throw ActionInvalid("action does not commute with face " + std::to_string(i) + " of " +
                                            x.id(k, s));
            }
}

// ---------------------------------------------------------------------------
// Products

namespace detail
{

int lookup_product_simplex(const ProductSet& p, int k, const std::vector<FormalSimplex>& coords)
{
    const auto& idx = p.index[static_cast<std::size_t>(k)];
    auto it = idx.find(tuple_key(coords));
    if (it == idx.end())
        throw InvalidSimplicialSet("coordinate tuple is not a nondegenerate product simplex");
    return it->second;
}

} // namespace detail

ProductSet product(const std::vector<const SimplicialSet*>& factors, std::size_t max_simplices)
{
    ProductSet p;
    const std::size_t n = factors.size();
    int top = 0;
    for (const auto* f : factors)
        top += std::max(f->dimension(), 0);
    if (top > kMaxDim)
        throw ResourceGuard("product dimension " + std::to_string(top) + " exceeds " + std::to_string(kMaxDim));
    for (const auto* f : factors)
        if (f->count(0) == 0)
            return p; // empty factor

    std::size_t total = 0;
    p.coordinates.resize(static_cast<std::size_t>(top + 1));
    p.index.resize(static_cast<std::size_t>(top + 1));

    std::vector<std::vector<FormalSimplex>> options(n);
    std::vector<FormalSimplex> current(n);
    for (int k = 0; k <= top; ++k)
    {
        const std::uint32_t full = k == 0 ? 0u : (std::uint32_t{1} << k) - 1;
        for (std::size_t f = 0; f < n; ++f)
        {
            options[f].clear();
            for (int d = 0; d <= std::min(k, factors[f]->dimension()); ++d)
                for (std::uint32_t bits = 0; bits <= full; ++bits)
                {
                    if (std::popcount(bits) != k - d)
                        continue;
                    for (int b = 0; b < static_cast<int>(factors[f]->count(d)); ++b)
                        options[f].push_back({bits, d, b});
                    if (full == 0)
                        break;
                }
        }
        auto& coords_k = p.coordinates[static_cast<std::size_t>(k)];
        std::function<void(std::size_t, std::uint32_t)> dfs = [&](std::size_t f, std::uint32_t common) {
            if (f == n)
            {
                if (common != 0)
                    return;
                if (++total > max_simplices)
                    throw ResourceGuard("product exceeds " + std::to_string(max_simplices) + " simplices");
                coords_k.push_back(current);
                return;
            }
            for (const auto& o : options[f])
            {
                current[f] = o;
                dfs(f + 1, common & o.degeneracies);
            }
        };
        dfs(0, full);

        auto& idx = p.index[static_cast<std::size_t>(k)];
        idx.reserve(coords_k.size());
        std::vector<FormalSimplex> faces;
        std::vector<FormalSimplex> face_coords(n);
        for (std::size_t s = 0; s < coords_k.size(); ++s)
        {
            const auto& coords = coords_k[s];
            idx.emplace(tuple_key(coords), static_cast<int>(s));
            std::string id = "(";
            for (std::size_t f = 0; f < n; ++f)
                id += (f ? "," : "") + formal_name(*factors[f], coords[f]);
            id += ")";

            faces.clear();
            for (int i = 0; k > 0 && i <= k; ++i)
            {
                std::uint32_t common = k == 1 ? 0u : (std::uint32_t{1} << (k - 1)) - 1;
                for (std::size_t f = 0; f < n; ++f)
                {
                    face_coords[f] = factors[f]->face(coords[f], i);
                    common &= face_coords[f].degeneracies;
                }
                if (common)
                    for (auto& c : face_coords)
                        c = strip(c, common);
                const int reduced = k - 1 - std::popcount(common);
                faces.push_back({common, reduced, detail::lookup_product_simplex(p, reduced, face_coords)});
            }
            p.space.add_simplex(k, std::move(id), faces);
        }
    }
    // Trim dimensions that carry no simplices (possible when factors are sparse at the top).
    while (!p.coordinates.empty() && p.coordinates.back().empty())
    {
        p.coordinates.pop_back();
        p.index.pop_back();
    }

    std::vector<FormalSimplex> base_coords;
    bool based = true;
    for (const auto* f : factors)
    {
        if (!f->is_based())
        {
            based = false;
            break;
        }
        base_coords.push_back(FormalSimplex::nondegenerate(0, *f->basepoint()));
    }
    if (based)
        p.space.set_basepoint(n == 0 ? 0 : detail::lookup_product_simplex(p, 0, base_coords));
    return p;
}

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y)
{
    return product(std::vector<const SimplicialSet*>{&x, &y}).space;
}

SimplicialAction diagonal_action(const ProductSet& p, const std::vector<const SimplicialAction*>& factor_actions)
{
    if (factor_actions.empty())
        return SimplicialAction::trivial(p.space);
    const FiniteGroup& group = factor_actions.front()->group;
    for (const auto* a : factor_actions)
        if (!(a->group == group))
            throw ActionInvalid("diagonal action needs one group acting on every factor");
    return induced_action(p, group, [&](int g, std::vector<FormalSimplex>& coords) {
        for (std::size_t f = 0; f < coords.size(); ++f)
            coords[f] = factor_actions[f]->act(g, coords[f]);
    });
}

SimplicialAction block_permutation_action(const ProductSet& p, const FiniteGroup& group, int block)
{
    if (!group.has_permutations())
        throw ActionInvalid("block permutation action needs a permutation group");
    std::vector<FormalSimplex> old;
    return induced_action(p, group, [&](int g, std::vector<FormalSimplex>& coords) {
        const auto& pi = group.permutation(g);
        if (pi.size() * static_cast<std::size_t>(block) != coords.size())
            throw ActionInvalid("blocks do not tile the product coordinates");
        old = coords;
        for (std::size_t b = 0; b < pi.size(); ++b)
            for (int t = 0; t < block; ++t)
                coords[static_cast<std::size_t>(pi[b] * block + t)] = old[b * static_cast<std::size_t>(block) + static_cast<std::size_t>(t)];
    });
}

SimplexMask basepoint_coordinate_mask(const ProductSet& p, const std::vector<const SimplicialSet*>& factors,
                                      int at_least)
{
    for (const auto* f : factors)
        if (!f->is_based())
            throw MissingBasepoint("every factor must be based");
    SimplexMask mask(p.coordinates.size());
    for (std::size_t k = 0; k < p.coordinates.size(); ++k)
    {
        mask[k].resize(p.coordinates[k].size());
        for (std::size_t s = 0; s < p.coordinates[k].size(); ++s)
        {
            int n = 0;
            const auto& coords = p.coordinates[k][s];
            for (std::size_t f = 0; f < coords.size(); ++f)
                n += coords[f].base_dim == 0 && coords[f].base == *factors[f]->basepoint();
            mask[k][s] = n >= at_least;
        }
    }
    return mask;
}

// ---------------------------------------------------------------------------
// Collapses, subcomplexes, quotients

namespace
{

bool marked(const SimplexMask& m, int k, int s)
{
    return static_cast<std::size_t>(k) < m.size() && static_cast<std::size_t>(s) < m[static_cast<std::size_t>(k)].size() &&
           m[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
}

void check_closed(const SimplicialSet& x, const SimplexMask& m, const char* what)
{
    for (int k = 1; k <= x.dimension(); ++k)
        for (int s = 0; s < static_cast<int>(x.count(k)); ++s)
            if (marked(m, k, s))
                for (int i = 0; i <= k; ++i)
                {
                    const auto& f = x.face(k, s, i);
                    if (!marked(m, f.base_dim, f.base))
                        throw InvalidSimplicialSet(std::string(what) + " is not closed under faces at " + x.id(k, s));
                }
}

} // namespace

CollapseSet collapse(const SimplicialSet& x, const SimplexMask& collapsed)
{
    check_closed(x, collapsed, "collapsed subcomplex");
    CollapseSet c;
    c.space.add_simplex(0, "*");
    c.space.set_basepoint(0);
    c.index_map.resize(static_cast<std::size_t>(x.dimension() + 1));
    for (int k = 0; k <= x.dimension(); ++k)
    {
        auto& map = c.index_map[static_cast<std::size_t>(k)];
        map.assign(x.count(k), -1);
        std::vector<FormalSimplex> faces;
        for (int s = 0; s < static_cast<int>(x.count(k)); ++s)
        {
            if (marked(collapsed, k, s))
                continue;
            faces.clear();
            for (int i = 0; k > 0 && i <= k; ++i)
            {
                const auto& f = x.face(k, s, i);
                if (marked(collapsed, f.base_dim, f.base))
                    faces.push_back(FormalSimplex::degenerate_vertex(k - 1, 0));
                else
                    faces.push_back({f.degeneracies, f.base_dim,
                                     c.index_map[static_cast<std::size_t>(f.base_dim)][static_cast<std::size_t>(f.base)]});
            }
            map[static_cast<std::size_t>(s)] = c.space.add_simplex(k, x.id(k, s), faces);
        }
    }
    return c;
}

SimplicialAction induced_action(const CollapseSet& c, const SimplicialAction& a)
{
    SimplicialAction out = SimplicialAction::trivial(c.space, a.group);
    for (int g = 0; g < a.group.order(); ++g)
        for (std::size_t k = 0; k < c.index_map.size(); ++k)
            for (std::size_t s = 0; s < c.index_map[k].size(); ++s)
            {
                const int image = c.index_map[k][s];
                if (image < 0)
                    continue;
                const int moved = c.index_map[k][static_cast<std::size_t>(a.perm[static_cast<std::size_t>(g)][k][s])];
                if (moved < 0)
                    throw ActionInvalid("collapsed subcomplex is not invariant");
                out.perm[static_cast<std::size_t>(g)][k][static_cast<std::size_t>(image)] = moved;
            }
    return out;
}

CollapseSet subcomplex(const SimplicialSet& x, const SimplexMask& keep)
{
    check_closed(x, keep, "subcomplex");
    CollapseSet c;
    c.index_map.resize(static_cast<std::size_t>(x.dimension() + 1));
    for (int k = 0; k <= x.dimension(); ++k)
    {
        auto& map = c.index_map[static_cast<std::size_t>(k)];
        map.assign(x.count(k), -1);
        std::vector<FormalSimplex> faces;
        for (int s = 0; s < static_cast<int>(x.count(k)); ++s)
        {
            if (!marked(keep, k, s))
                continue;
            faces.clear();
            for (int i = 0; k > 0 && i <= k; ++i)
            {
                const auto& f = x.face(k, s, i);
                faces.push_back({f.degeneracies, f.base_dim,
                                 c.index_map[static_cast<std::size_t>(f.base_dim)][static_cast<std::size_t>(f.base)]});
            }
            map[static_cast<std::size_t>(s)] = c.space.add_simplex(k, x.id(k, s), faces);
        }
    }
    if (x.basepoint() && marked(keep, 0, *x.basepoint()))
        c.space.set_basepoint(c.index_map[0][static_cast<std::size_t>(*x.basepoint())]);
    return c;
}

QuotientSet quotient_by_action(const SimplicialSet& x, const SimplicialAction& a)
{
    a.validate(x);
    QuotientSet q;
    const auto dims = static_cast<std::size_t>(x.dimension() + 1);
    q.orbit_of.resize(dims);
    q.representative.resize(dims);
    for (int k = 0; k <= x.dimension(); ++k)
    {
        auto& orbit = q.orbit_of[static_cast<std::size_t>(k)];
        auto& reps = q.representative[static_cast<std::size_t>(k)];
        orbit.assign(x.count(k), -1);
        for (int s = 0; s < static_cast<int>(x.count(k)); ++s)
        {
            int least = s;
            for (int g = 0; g < a.group.order(); ++g)
                least = std::min(least, a.perm[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)][static_cast<std::size_t>(s)]);
            if (least == s)
            {
                orbit[static_cast<std::size_t>(s)] = static_cast<int>(reps.size());
                reps.push_back(s);
            }
            else
                orbit[static_cast<std::size_t>(s)] = orbit[static_cast<std::size_t>(least)];
        }
        std::vector<FormalSimplex> faces;
        for (int r : reps)
        {
            faces.clear();
            for (int i = 0; k > 0 && i <= k; ++i)
            {
                const auto& f = x.face(k, r, i);
                faces.push_back({f.degeneracies, f.base_dim,
                                 q.orbit_of[static_cast<std::size_t>(f.base_dim)][static_cast<std::size_t>(f.base)]});
            }
            q.space.add_simplex(k, a.group.order() == 1 ? x.id(k, r) : "[" + x.id(k, r) + "]", faces);
        }
    }
    if (x.basepoint())
        q.space.set_basepoint(q.orbit_of[0][static_cast<std::size_t>(*x.basepoint())]);
    return q;
}

// ---------------------------------------------------------------------------
// Wedges, smashes, suspension

SimplicialSet disjoint_union(const std::vector<const SimplicialSet*>& xs)
{
    SimplicialSet out;
    std::vector<int> offset;
    int top = -1;
    for (const auto* x : xs)
        top = std::max(top, x->dimension());
    std::vector<std::vector<int>> offsets(xs.size(), std::vector<int>(static_cast<std::size_t>(top + 1), 0));
    for (int k = 0; k <= top; ++k)
    {
        int running = 0;
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            offsets[i][static_cast<std::size_t>(k)] = running;
            running += static_cast<int>(xs[i]->count(k));
        }
    }
    std::vector<FormalSimplex> faces;
    for (int k = 0; k <= top; ++k)
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (int s = 0; s < static_cast<int>(xs[i]->count(k)); ++s)
            {
                faces.clear();
                for (int j = 0; k > 0 && j <= k; ++j)
                {
                    auto f = xs[i]->face(k, s, j);
                    f.base += offsets[i][static_cast<std::size_t>(f.base_dim)];
                    faces.push_back(f);
                }
                out.add_simplex(k, std::to_string(i) + "|" + xs[i]->id(k, s), faces);
            }
    return out;
}

SimplicialSet wedge(const std::vector<const SimplicialSet*>& xs)
{
    SimplexMask points(1);
    int offset = 0;
    for (const auto* x : xs)
    {
        if (!x->is_based())
            throw MissingBasepoint("wedge summands must be based");
        offset += static_cast<int>(x->count(0));
    }
    points[0].assign(static_cast<std::size_t>(offset), false);
    offset = 0;
    for (const auto* x : xs)
    {
        points[0][static_cast<std::size_t>(offset + *x->basepoint())] = true;
        offset += static_cast<int>(x->count(0));
    }
    if (xs.empty())
    {
        SimplicialSet point;
        point.add_simplex(0, "*");
        point.set_basepoint(0);
        return point;
    }
    return collapse(disjoint_union(xs), points).space;
}

CollapseSet smash(const ProductSet& p, const std::vector<const SimplicialSet*>& factors)
{
    return collapse(p.space, basepoint_coordinate_mask(p, factors, 1));
}

SimplicialSet smash(const std::vector<const SimplicialSet*>& xs)
{
    for (const auto* x : xs)
        if (!x->is_based())
            throw MissingBasepoint("smash factors must be based");
    return smash(product(xs), xs).space;
}

SimplicialSet suspension(const SimplicialSet& x)
{
    if (!x.is_based())
        throw MissingBasepoint("reduced suspension needs a basepoint");
    SimplicialSet circle;
    circle.add_simplex(0, "v");
    circle.add_simplex(1, "e", {FormalSimplex::nondegenerate(0, 0), FormalSimplex::nondegenerate(0, 0)});
    circle.set_basepoint(0);
    return smash({&x, &circle});
}

// ---------------------------------------------------------------------------
// JSON

void to_json(nlohmann::json& j, const SimplicialSet& x)
{
    nlohmann::json simplices = nlohmann::json::array();
    nlohmann::json faces = nlohmann::json::array();
    for (int k = 0; k <= x.dimension(); ++k)
    {
        nlohmann::json ids = nlohmann::json::array();
        nlohmann::json fk = nlohmann::json::array();
        for (int s = 0; s < static_cast<int>(x.count(k)); ++s)
        {
            ids.push_back(x.id(k, s));
            nlohmann::json fs = nlohmann::json::array();
            for (int i = 0; k > 0 && i <= k; ++i)
            {
                const auto& f = x.face(k, s, i);
                fs.push_back({f.word(), f.base});
            }
            fk.push_back(std::move(fs));
        }
        simplices.push_back(std::move(ids));
        faces.push_back(std::move(fk));
    }
    j = {{"dimensions", x.f_vector()},
         {"simplices", simplices},
         {"faces", faces},
         {"basepoint", x.basepoint() ? nlohmann::json(*x.basepoint()) : nlohmann::json(nullptr)}};
}

void from_json(const nlohmann::json& j, SimplicialSet& x)
{
    x = SimplicialSet();
    const auto& simplices = j.at("simplices");
    const auto& faces = j.at("faces");
    for (std::size_t k = 0; k < simplices.size(); ++k)
        for (std::size_t s = 0; s < simplices[k].size(); ++s)
        {
            std::vector<FormalSimplex> fs;
            for (const auto& f : faces[k][s])
            {
                std::uint32_t bits = 0;
                for (int w : f[0].get<std::vector<int>>())
                    bits |= std::uint32_t{1} << w;
                const int base_dim = static_cast<int>(k) - 1 - std::popcount(bits);
                fs.push_back({bits, base_dim, f[1].get<int>()});
            }
            x.add_simplex(static_cast<int>(k), simplices[k][s].get<std::string>(), std::move(fs));
        }
    if (!j.at("basepoint").is_null())
        x.set_basepoint(j.at("basepoint").get<int>());
    x.validate();
}

nlohmann::json to_json(const SimplicialSet& x, const SimplicialAction& a)
{
    return {{"space", x}, {"action", {{"group", a.group.table()}, {"permutations", a.perm}}}};
}

} // namespace repspace
