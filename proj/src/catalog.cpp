#include "repspace/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "repspace/counting.hpp"
#include "repspace/errors.hpp"

namespace repspace
{

// ---------------------------------------------------------------------------
// Simplicial models

EquivariantSet circle_conj()
{
    SimplicialSet c;
    c.add_simplex(0, "+1");
    c.add_simplex(0, "-1");
    for (const char* e : {"upper", "lower"})
        c.add_simplex(1, e, {FormalSimplex::nondegenerate(0, 1), FormalSimplex::nondegenerate(0, 0)});
    c.set_basepoint(0);
    SimplicialAction a = SimplicialAction::trivial(c, FiniteGroup::cyclic(2));
    a.perm[1][1] = {1, 0};
    return {std::move(c), std::move(a)};
}

SimplicialSet minimal_circle()
{
    return sphere(1);
}

SimplicialSet sphere(int n)
{
    if (n < 0)
        throw UnknownSpace("sphere needs n >= 0");
    if (n > 16)
        throw ResourceGuard("sphere dimension above 16");
    SimplicialSet s;
    if (n == 0)
    {
        s.add_simplex(0, "+1");
        s.add_simplex(0, "-1");
    }
    else
    {
        s.add_simplex(0, "*");
        s.add_simplex(n, "e" + std::to_string(n),
                      std::vector<FormalSimplex>(static_cast<std::size_t>(n + 1), FormalSimplex::degenerate_vertex(n - 1, 0)));
    }
    s.set_basepoint(0);
    return s;
}

SimplicialSet rp2()
{
    SimplicialSet x;
    x.add_simplex(0, "v");
    x.add_simplex(1, "a", {FormalSimplex::nondegenerate(0, 0), FormalSimplex::nondegenerate(0, 0)});
    x.add_simplex(2, "f", {FormalSimplex::nondegenerate(1, 0), FormalSimplex::degenerate_vertex(1, 0),
                           FormalSimplex::nondegenerate(1, 0)});
    x.set_basepoint(0);
    return x;
}

namespace
{

void guard_range(const char* what, int value, int low, int high)
{
    if (value < low)
        throw UnknownSpace(std::string(what) + " needs a value >= " + std::to_string(low));
    if (value > high)
        throw ResourceGuard(std::string(what) + " = " + std::to_string(value) + " exceeds the limit " +
                            std::to_string(high));
}

} // namespace

Torus torus(int n)
{
    guard_range("torus n", n, 1, 6);
    static const EquivariantSet circle = circle_conj();
    std::vector<const SimplicialSet*> factors(static_cast<std::size_t>(n), &circle.space);
    std::vector<const SimplicialAction*> actions(static_cast<std::size_t>(n), &circle.action);
    Torus t{product(factors), {}};
    t.conjugation = diagonal_action(t.product, actions);
    return t;
}

SimplicialSet min_torus(int n)
{
    guard_range("min_torus n", n, 0, 6);
    const SimplicialSet c = minimal_circle();
    return product(std::vector<const SimplicialSet*>(static_cast<std::size_t>(n), &c)).space;
}

SimplicialSet torus_conj_quotient(int n)
{
    guard_range("torus_conj_quotient n", n, 1, 6);
    Torus t = torus(n);
    return quotient_by_action(t.product.space, t.conjugation).space;
}

SimplicialSet smash_factor(int n)
{
    guard_range("smash_factor n", n, 1, 6);
    Torus t = torus(n);
    static const EquivariantSet circle = circle_conj();
    std::vector<const SimplicialSet*> factors(static_cast<std::size_t>(n), &circle.space);
    CollapseSet smashed = smash(t.product, factors);
    return quotient_by_action(smashed.space, induced_action(smashed, t.conjugation)).space;
}

SimplicialSet sym_product(const SimplicialSet& x, int m)
{
    guard_range("symmetric product m", m, 0, 3);
    if (m == 0)
        return min_torus(0);
    ProductSet p = product(std::vector<const SimplicialSet*>(static_cast<std::size_t>(m), &x));
    return quotient_by_action(p.space, block_permutation_action(p, FiniteGroup::symmetric(m), 1)).space;
}

SimplicialSet rep_sp(int n, int m)
{
    return sym_product(torus_conj_quotient(n), m);
}

SimplicialSet sym_product_factor(int n, int m)
{
    guard_range("sym_product_factor n", n, 1, 6);
    guard_range("sym_product_factor m", m, 1, 3);
    if (n * m > 9)
        throw ResourceGuard("sym_product_factor needs n*m <= 9");
    const SimplicialSet c = minimal_circle();
    ProductSet p = product(std::vector<const SimplicialSet*>(static_cast<std::size_t>(n * m), &c));

    // Point i of the configuration owns coordinates i*n .. i*n+n-1; column j is coordinate j of every point.
    SimplexMask full_column(p.coordinates.size());
    for (std::size_t k = 0; k < p.coordinates.size(); ++k)
    {
        full_column[k].resize(p.coordinates[k].size());
        for (std::size_t s = 0; s < p.coordinates[k].size(); ++s)
        {
            const auto& coords = p.coordinates[k][s];
            bool any = false;
            for (int j = 0; j < n && !any; ++j)
            {
                bool column = true;
                for (int i = 0; i < m && column; ++i)
                    column = coords[static_cast<std::size_t>(i * n + j)].base_dim == 0;
                any = column;
            }
            full_column[k][s] = any;
        }
    }
    const auto action = block_permutation_action(p, FiniteGroup::symmetric(m), n);
    CollapseSet collapsed = collapse(p.space, full_column);
    return quotient_by_action(collapsed.space, induced_action(collapsed, action)).space;
}

EquivariantSet antipodal_sphere(int n)
{
    guard_range("antipodal_sphere n", n, 0, 4);
    const int width = n + 1;
    std::vector<std::vector<int>> vertices;
    std::vector<int> v(static_cast<std::size_t>(width), -1);
    std::function<void(int)> rec = [&](int i) {
        if (i == width)
        {
            if (std::any_of(v.begin(), v.end(), [](int t) { return t != 0; }))
                vertices.push_back(v);
            return;
        }
        for (int t : {1, 0, -1})
        {
            v[static_cast<std::size_t>(i)] = t;
            rec(i + 1);
        }
    };
    rec(0);
    auto below = [&](const std::vector<int>& a, const std::vector<int>& b) {
        if (a == b)
            return false;
        for (int i = 0; i < width; ++i)
            if (a[static_cast<std::size_t>(i)] != 0 && a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
                return false;
        return true;
    };
    auto label = [](const std::vector<int>& a) {
        std::string s;
        for (int t : a)
            s += t > 0 ? '+' : t < 0 ? '-' : '0';
        return s;
    };
    const int count = static_cast<int>(vertices.size());
    std::vector<int> negation(static_cast<std::size_t>(count));
    for (int a = 0; a < count; ++a)
    {
        auto neg = vertices[static_cast<std::size_t>(a)];
        for (auto& t : neg)
            t = -t;
        negation[static_cast<std::size_t>(a)] =
            static_cast<int>(std::find(vertices.begin(), vertices.end(), neg) - vertices.begin());
    }

    // Strict chains by length; the nerve is an ordered simplicial complex.
    std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(width));
    EquivariantSet out;
    std::vector<std::vector<int>> level;
    for (int a = 0; a < count; ++a)
        level.push_back({a});
    for (int k = 0; k < width && !level.empty(); ++k)
    {
        std::vector<std::vector<int>> next;
        for (const auto& chain : level)
        {
            std::vector<FormalSimplex> faces;
            for (int i = 0; k > 0 && i <= k; ++i)
            {
                auto face = chain;
                face.erase(face.begin() + i);
                faces.push_back(FormalSimplex::nondegenerate(k - 1, index[static_cast<std::size_t>(k - 1)].at(face)));
            }
            std::string id;
            for (int a : chain)
                id += (id.empty() ? "" : "<") + label(vertices[static_cast<std::size_t>(a)]);
            index[static_cast<std::size_t>(k)][chain] = out.space.add_simplex(k, id, faces);
            for (int b = 0; b < count; ++b)
                if (below(vertices[static_cast<std::size_t>(chain.back())], vertices[static_cast<std::size_t>(b)]))
                {
                    auto longer = chain;
                    longer.push_back(b);
                    next.push_back(std::move(longer));
                }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    out.space.set_basepoint(0);

    out.action = SimplicialAction::trivial(out.space, FiniteGroup::cyclic(2));
    for (int k = 0; k <= out.space.dimension(); ++k)
        for (const auto& [chain, s] : index[static_cast<std::size_t>(k)])
        {
            std::vector<int> image;
            for (int a : chain)
                image.push_back(negation[static_cast<std::size_t>(a)]);
            out.action.perm[1][static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] =
                index[static_cast<std::size_t>(k)].at(image);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Cellular models

namespace
{

// Chain complex from per-degree generator counts and a boundary rule giving (row, coefficient) pairs.
ChainComplex cellular(std::vector<Index> ranks,
                      const std::function<std::vector<std::pair<Index, long>>(int, Index)>& boundary)
{
    ChainComplex c;
    c.ranks = std::move(ranks);
    c.boundaries.push_back(SparseIntMatrix(0, c.ranks.empty() ? 0 : c.ranks[0]));
    for (int k = 1; k <= c.top_degree(); ++k)
    {
        std::vector<Triplet> t;
        for (Index g = 0; g < c.rank(k); ++g)
            for (auto [row, coeff] : boundary(k, g))
                t.push_back({row, g, coeff});
        c.boundaries.push_back(SparseIntMatrix::from_triplets(c.rank(k - 1), c.rank(k), std::move(t)));
    }
    return c;
}

} // namespace

ChainComplex stunted_projective(int m, int k)
{
    if (k < 0 || k > m)
        throw UnknownSpace("stunted_projective needs 0 <= k <= m");
    if (m > 64)
        throw ResourceGuard("stunted_projective m above 64");
    std::vector<Index> ranks(static_cast<std::size_t>(m + 1), 0);
    ranks[0] = 1;
    for (int j = std::max(k, 1); j <= m; ++j)
        ranks[static_cast<std::size_t>(j)] = 1;
    // d e_j = (1 + (-1)^j) e_{j-1} when e_{j-1} survives; e_0 never receives a nonzero coefficient.
    return cellular(ranks, [&](int j, Index) -> std::vector<std::pair<Index, long>> {
        if (j % 2 == 0 && j - 1 >= std::max(k, 1))
            return {{0, 2}};
        return {};
    });
}

ChainComplex real_projective(int n)
{
    return stunted_projective(n, 0);
}

ChainComplex thom_space(int n)
{
    if (n < 0)
        throw UnknownSpace("thom_space needs n >= 0");
    if (n > 60)
        throw ResourceGuard("thom_space n above 60");
    if (n > 0)
        return stunted_projective(n + 2, n);
    // RP^2 plus a disjoint basepoint (generator 1 in degree 0).
    return cellular({2, 1, 1}, [](int j, Index) -> std::vector<std::pair<Index, long>> {
        if (j == 2)
            return {{0, 2}};
        return {};
    });
}

ChainComplex thom_space_su2_factor(int n)
{
    if (n < 2)
        return thom_space(n);
    if (n > 60)
        throw ResourceGuard("thom_space_su2_factor n above 60");
    // Mapping cone of the zero section C~(RP^2) -> C(RP^{n+2}/RP^{n-1}).
    // Degree d holds the Thom cell e_d (if n <= d <= n+2, or the basepoint at d = 0)
    // followed by the cone cell on b_{d-1} (d = 2, 3).
    auto thom_cell = [n](int d) { return d == 0 || (d >= n && d <= n + 2); };
    auto cone_cell = [](int d) { return d == 2 || d == 3; };
    std::vector<Index> ranks(static_cast<std::size_t>(n + 3), 0);
    for (int d = 0; d <= n + 2; ++d)
        ranks[static_cast<std::size_t>(d)] = thom_cell(d) + cone_cell(d);
    auto cone_row = [&](int d) { return static_cast<Index>(thom_cell(d)); };
    return cellular(ranks, [&](int d, Index g) -> std::vector<std::pair<Index, long>> {
        std::vector<std::pair<Index, long>> out;
        const bool is_thom = thom_cell(d) && g == 0;
        if (is_thom)
        {
            if (d > n && d % 2 == 0)
                out.push_back({0, 2});
            return out;
        }
        const int k = d - 1; // the cone cell on b_k
        if (k == n)
            out.push_back({0, 1}); // zero section hits the bottom Thom cell
        if (k == 2)
            out.push_back({cone_row(d - 1), -2});
        return out;
    });
}

GradedGroup lens_q8()
{
    const AbelianGroup h1 = abelianization(FiniteGroup::quaternion_q8());
    // Poincare duality and universal coefficients: H_2 = H^1 = Hom(H_1, Z).
    const AbelianGroup h2 = AbelianGroup::free(h1.free_rank());
    return GradedGroup({AbelianGroup::free(1), h1, h2, AbelianGroup::free(1)});
}

// ---------------------------------------------------------------------------
// Descriptors

namespace
{

enum class Arg
{
    Int,
    Space
};

struct Entry
{
    std::vector<std::pair<std::string, Arg>> params;
    std::string help;
};

const std::map<std::string, Entry>& entries()
{
    static const std::map<std::string, Entry> table = {
        {"point", {{}, "a single vertex"}},
        {"sphere", {{{"n", Arg::Int}}, "S^n as Delta^n / boundary (S^0: two points)"}},
        {"circle", {{}, "one-vertex circle"}},
        {"circle_conj", {{}, "2-gon circle with complex conjugation"}},
        {"rp2", {{}, "minimal RP^2"}},
        {"torus", {{{"n", Arg::Int}}, "(S^1)^n on the 2-gon circle, n <= 6"}},
        {"min_torus", {{{"n", Arg::Int}}, "(S^1)^n on the one-vertex circle, n <= 6"}},
        {"torus_conj_quotient", {{{"n", Arg::Int}}, "(S^1)^n / Z2 by diagonal conjugation"}},
        {"smash_factor", {{{"n", Arg::Int}}, "T^(smash n) / Z2"}},
        {"sym_product", {{{"space", Arg::Space}, {"m", Arg::Int}}, "SP^m of a simplicial space, m <= 3"}},
        {"rep_u", {{{"n", Arg::Int}, {"m", Arg::Int}}, "Rep(Z^n, U(m)) = sym_product(space=min_torus(n), m)"}},
        {"rep_sp", {{{"n", Arg::Int}, {"m", Arg::Int}}, "Rep(Z^n, Sp(m)) = sym_product(space=torus_conj_quotient(n), m)"}},
        {"sym_product_factor", {{{"n", Arg::Int}, {"m", Arg::Int}}, "SP^m(T^n) / S^1(SP^m(T^n))"}},
        {"suspension", {{{"space", Arg::Space}}, "reduced suspension of a simplicial space"}},
        {"wedge", {{{"space", Arg::Space}, {"k", Arg::Int}}, "wedge of k copies of a simplicial space"}},
        {"antipodal_sphere", {{{"n", Arg::Int}}, "subdivided S^n with the antipodal involution"}},
        {"real_projective", {{{"n", Arg::Int}}, "cellular RP^n"}},
        {"stunted_projective", {{{"m", Arg::Int}, {"k", Arg::Int}}, "cellular RP^m / RP^(k-1)"}},
        {"thom_space", {{{"n", Arg::Int}}, "(RP^2)^(n lambda) = RP^(n+2) / RP^(n-1)"}},
        {"thom_space_su2_factor", {{{"n", Arg::Int}}, "Thom space modulo the zero section (n >= 2)"}},
        {"lens_q8", {{}, "S^3 / Q8 (fixed homology data)"}},
    };
    return table;
}

class Parser
{
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Descriptor parse()
    {
        Descriptor d = descriptor();
        skip();
        if (pos_ != text_.size())
            fail("trailing characters");
        return d;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw UnknownSpace("cannot parse '" + text_ + "' at position " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char ch)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == ch)
        {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string identifier()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])))
            fail("expected an identifier");
        return text_.substr(start, pos_ - start);
    }

    Descriptor descriptor()
    {
        Descriptor d;
        d.name = identifier();
        if (!accept('('))
            return d;
        if (accept(')'))
            return d;
        do
        {
            std::string key = identifier();
            if (!accept('='))
                fail("expected '='");
            skip();
            if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-'))
            {
                const std::size_t start = pos_++;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                try
                {
                    d.args.emplace_back(std::move(key), std::stol(text_.substr(start, pos_ - start)));
                }
                catch (const std::exception&)
                {
                    fail("bad integer");
                }
            }
            else
                d.args.emplace_back(std::move(key), std::make_shared<Descriptor>(descriptor()));
        } while (accept(','));
        if (!accept(')'))
            fail("expected ')'");
        return d;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

Descriptor make(std::string name, std::vector<std::pair<std::string, std::variant<long, std::shared_ptr<Descriptor>>>> args)
{
    return Descriptor{std::move(name), std::move(args)};
}

} // namespace

long Descriptor::integer(const std::string& key) const
{
    for (const auto& [k, v] : args)
        if (k == key)
        {
            if (const long* i = std::get_if<long>(&v))
                return *i;
            throw UnknownSpace(name + ": argument " + key + " must be an integer");
        }
    throw UnknownSpace(name + ": missing argument " + key);
}

const Descriptor& Descriptor::space(const std::string& key) const
{
    for (const auto& [k, v] : args)
        if (k == key)
        {
            if (const auto* d = std::get_if<std::shared_ptr<Descriptor>>(&v))
                return **d;
            throw UnknownSpace(name + ": argument " + key + " must be a space descriptor");
        }
    throw UnknownSpace(name + ": missing argument " + key);
}

std::string Descriptor::to_string() const
{
    std::string s = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i)
    {
        s += (i ? "," : "") + args[i].first + "=";
        if (const long* v = std::get_if<long>(&args[i].second))
            s += std::to_string(*v);
        else
            s += std::get<std::shared_ptr<Descriptor>>(args[i].second)->to_string();
    }
    return s + ")";
}

nlohmann::json Descriptor::to_json() const
{
    nlohmann::json a = nlohmann::json::object();
    for (const auto& [k, v] : args)
    {
        if (const long* i = std::get_if<long>(&v))
            a[k] = *i;
        else
            a[k] = std::get<std::shared_ptr<Descriptor>>(v)->to_json();
    }
    return {{"name", name}, {"args", a}};
}

Descriptor parse_descriptor(const std::string& text)
{
    return canonical(Parser(text).parse());
}

Descriptor canonical(const Descriptor& d)
{
    auto it = entries().find(d.name);
    if (it == entries().end())
        throw UnknownSpace("unknown space '" + d.name + "'");
    const auto& params = it->second.params;
    for (const auto& [k, v] : d.args)
        if (std::none_of(params.begin(), params.end(), [&](const auto& p) { return p.first == k; }))
            throw UnknownSpace(d.name + ": unexpected argument " + k);
    if (d.args.size() != params.size())
        throw UnknownSpace(d.name + " takes " + std::to_string(params.size()) + " arguments");

    Descriptor out{d.name, {}};
    for (const auto& [key, kind] : params)
    {
        if (kind == Arg::Int)
            out.args.emplace_back(key, d.integer(key));
        else
            out.args.emplace_back(key, std::make_shared<Descriptor>(canonical(d.space(key))));
    }
    if (out.name == "rep_u")
        return make("sym_product", {{"space", std::make_shared<Descriptor>(make("min_torus", {{"n", out.integer("n")}}))},
                                    {"m", out.integer("m")}});
    if (out.name == "rep_sp")
        return make("sym_product",
                    {{"space", std::make_shared<Descriptor>(make("torus_conj_quotient", {{"n", out.integer("n")}}))},
                     {"m", out.integer("m")}});
    if (out.name == "circle")
        return make("sphere", {{"n", 1L}});
    return out;
}

ChainComplex CatalogSpace::chains() const
{
    if (simplicial)
        return normalized_chains(*simplicial);
    if (cellular)
        return *cellular;
    throw Unsupported(descriptor.to_string() + " is fixed homology data without a chain model");
}

CatalogSpace build_space(const std::string& text)
{
    return build_space(parse_descriptor(text));
}

CatalogSpace build_space(const Descriptor& raw)
{
    const Descriptor d = canonical(raw);
    CatalogSpace s{d, {}, {}, {}};
    auto as_int = [&](const char* key) { return static_cast<int>(std::clamp(d.integer(key), -1000L, 1000L)); };
    auto inner_simplicial = [&](const char* key) {
        CatalogSpace inner = build_space(d.space(key));
        if (!inner.simplicial)
            throw UnknownSpace(d.name + " needs a simplicial space, got " + inner.descriptor.to_string());
        return std::move(*inner.simplicial);
    };

    const std::string& n = d.name;
    if (n == "point")
        s.simplicial = min_torus(0);
    else if (n == "sphere")
        s.simplicial = sphere(as_int("n"));
    else if (n == "circle_conj")
        s.simplicial = circle_conj().space;
    else if (n == "rp2")
        s.simplicial = rp2();
    else if (n == "torus")
        s.simplicial = torus(as_int("n")).product.space;
    else if (n == "min_torus")
        s.simplicial = min_torus(as_int("n"));
    else if (n == "torus_conj_quotient")
        s.simplicial = torus_conj_quotient(as_int("n"));
    else if (n == "smash_factor")
        s.simplicial = smash_factor(as_int("n"));
    else if (n == "sym_product")
        s.simplicial = sym_product(inner_simplicial("space"), as_int("m"));
    else if (n == "sym_product_factor")
        s.simplicial = sym_product_factor(as_int("n"), as_int("m"));
    else if (n == "suspension")
        s.simplicial = suspension(inner_simplicial("space"));
    else if (n == "wedge")
    {
        const int k = as_int("k");
        guard_range("wedge k", k, 0, 64);
        const SimplicialSet x = inner_simplicial("space");
        s.simplicial = wedge(std::vector<const SimplicialSet*>(static_cast<std::size_t>(k), &x));
    }
    else if (n == "antipodal_sphere")
        s.simplicial = antipodal_sphere(as_int("n")).space;
    else if (n == "real_projective")
        s.cellular = real_projective(as_int("n"));
    else if (n == "stunted_projective")
        s.cellular = stunted_projective(as_int("m"), as_int("k"));
    else if (n == "thom_space")
        s.cellular = thom_space(as_int("n"));
    else if (n == "thom_space_su2_factor")
        s.cellular = thom_space_su2_factor(as_int("n"));
    else if (n == "lens_q8")
        s.fixed = lens_q8();
    else
        throw UnknownSpace("unknown space '" + n + "'");
    return s;
}

GradedGroup catalog_homology(const CatalogSpace& s, const HomologyCache* cache, const HomologyOptions& options,
                             bool* cache_hit)
{
    if (cache_hit)
        *cache_hit = false;
    if (s.fixed)
    {
        if (options.on_degree)
            for (std::size_t k = 0; k < s.fixed->size(); ++k)
                options.on_degree(k, (*s.fixed)[k]);
        return *s.fixed;
    }
    auto compute = [&] { return homology(s.chains(), options); };
    if (!cache)
        return compute();
    GradedGroup h = cache->get_or_compute(s.descriptor.to_json(), compute, cache_hit);
    if (cache_hit && *cache_hit && options.on_degree)
        for (std::size_t k = 0; k < h.size(); ++k)
            options.on_degree(k, h[k]);
    return h;
}

std::string descriptor_help()
{
    std::ostringstream out;
    out << "Space descriptors: name(key=value,...), values are integers or nested descriptors.\n";
    for (const auto& [name, e] : entries())
    {
        std::string sig = name + "(";
        for (std::size_t i = 0; i < e.params.size(); ++i)
            sig += (i ? "," : "") + e.params[i].first + "=";
        sig += ")";
        out << "  " << sig << std::string(sig.size() < 36 ? 36 - sig.size() : 1, ' ') << e.help << '\n';
    }
    return out.str();
}

std::vector<std::string> property_catalog()
{
    return {"point()",
            "sphere(n=0)",
            "sphere(n=2)",
            "circle()",
            "circle_conj()",
            "rp2()",
            "torus(n=1)",
            "torus(n=2)",
            "torus(n=3)",
            "min_torus(n=3)",
            "torus_conj_quotient(n=1)",
            "torus_conj_quotient(n=2)",
            "torus_conj_quotient(n=3)",
            "torus_conj_quotient(n=4)",
            "smash_factor(n=1)",
            "smash_factor(n=2)",
            "smash_factor(n=3)",
            "sym_product(space=sphere(n=2),m=2)",
            "rep_u(n=2,m=2)",
            "rep_sp(n=2,m=1)",
            "rep_sp(n=2,m=2)",
            "sym_product_factor(n=2,m=2)",
            "suspension(space=rp2())",
            "wedge(space=circle(),k=3)",
            "antipodal_sphere(n=2)",
            "real_projective(n=4)",
            "stunted_projective(m=4,k=2)",
            "thom_space(n=0)",
            "thom_space(n=1)",
            "thom_space(n=3)",
            "thom_space_su2_factor(n=2)",
            "thom_space_su2_factor(n=3)"};
}

} // namespace repspace
