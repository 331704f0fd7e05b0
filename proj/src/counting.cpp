#include "repspace/counting.hpp"

#include <algorithm>
#include <functional>

#include "repspace/errors.hpp"
#include "repspace/smith.hpp"

namespace repspace
{

namespace
{

Integer integral(const Rational& q, const char* what)
{
    if (boost::multiprecision::denominator(q) != 1)
        throw NonIntegral(std::string(what) + " evaluates to " + q.str());
    return boost::multiprecision::numerator(q);
}

Rational rpow(long base, int exp)
{
    return Rational(ipow(Integer(base), static_cast<unsigned>(exp)));
}

void require_positive(int n, const char* what)
{
    if (n < 1)
        throw Unsupported(std::string(what) + " needs n >= 1");
}

// Solves sum_{r=1}^{n} binom(n,r) X(r) = rhs(n) for X(n).
Integer triangular(int n, const std::function<Integer(int)>& rhs)
{
    std::vector<Integer> x(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k)
    {
        Integer acc = rhs(k);
        for (int r = 1; r < k; ++r)
            acc -= binomial(k, r) * x[static_cast<std::size_t>(r)];
        x[static_cast<std::size_t>(k)] = acc;
    }
    return x[static_cast<std::size_t>(n)];
}

} // namespace

Integer a_count(int n)
{
    require_positive(n, "A(n)");
    return integral((rpow(2, n) - 1) * (rpow(2, n - 1) - 1) / 3, "A(n)");
}

Integer c_count(int n)
{
    require_positive(n, "C(n)");
    return integral((rpow(3, n - 1) - 1) / 2, "C(n)");
}

Integer c_via_recurrence(int n)
{
    require_positive(n, "C(n)");
    return triangular(n, a_count);
}

Integer d_count(int n)
{
    require_positive(n, "D(n)");
    if (n == 1)
        return 0; // no nontrivial 1 x 1 types
    return integral(rpow(2, n - 2) * (rpow(2, n) - 1) * (rpow(2, n - 1) - 1) / 3, "D(n)");
}

Integer k_count(int n)
{
    require_positive(n, "K(n)");
    return integral(rpow(7, n) / 24 - rpow(3, n) / 8 + Rational(1, 12), "K(n)");
}

Integer k_via_recurrence(int n)
{
    require_positive(n, "K(n)");
    return triangular(n, d_count);
}

Integer n_central_product(int n, int m, unsigned p)
{
    if (!is_prime(p))
        throw NotPrime(std::to_string(p) + " is not prime");
    if (n < 2 || m < 1)
        throw Unsupported("N(n,m,p) needs n >= 2 and m >= 1");
    const long q = static_cast<long>(p);
    Rational v = rpow(q, (m - 1) * (n - 2)) * (rpow(q, n) - 1) * (rpow(q, n - 1) - 1) / (rpow(q, 2) - 1) + 1;
    return integral(v, "N(n,m,p)");
}

Integer r_of(int n, int i)
{
    if (i < 1 || i > n)
        return 0;
    Integer sum = 0;
    for (int t = 0; t <= n - i - 1; ++t)
        sum += binomial(n, t);
    return sum;
}

// ---------------------------------------------------------------------------

FiniteAbelianGroup::FiniteAbelianGroup(const AbelianGroup& g) : group_(g)
{
    if (g.free_rank() != 0)
        throw Unsupported("type matrices need a finite coefficient group, got " + g.to_string());
    for (const auto& d : g.torsion())
    {
        if (d > Integer(1'000'000))
            throw ResourceGuard("invariant factor " + d.str() + " is too large to enumerate");
        radix_.push_back(d.convert_to<std::uint64_t>());
        order_ *= radix_.back();
    }
}

std::vector<std::uint64_t> FiniteAbelianGroup::coordinates(std::uint64_t a) const
{
    std::vector<std::uint64_t> c;
    for (auto r : radix_)
    {
        c.push_back(a % r);
        a /= r;
    }
    return c;
}

std::uint64_t FiniteAbelianGroup::add(std::uint64_t a, std::uint64_t b) const
{
    std::uint64_t out = 0, scale = 1;
    for (auto r : radix_)
    {
        out += ((a % r + b % r) % r) * scale;
        a /= r;
        b /= r;
        scale *= r;
    }
    return out;
}

std::uint64_t FiniteAbelianGroup::negate(std::uint64_t a) const
{
    std::uint64_t out = 0, scale = 1;
    for (auto r : radix_)
    {
        out += ((r - a % r) % r) * scale;
        a /= r;
        scale *= r;
    }
    return out;
}

std::string FiniteAbelianGroup::element_string(std::uint64_t a) const
{
    auto c = coordinates(a);
    if (c.size() == 1)
        return std::to_string(c[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

Integer count_types(int n, const AbelianGroup& k)
{
    FiniteAbelianGroup g(k);
    return ipow(Integer(g.order()), static_cast<unsigned>(n * (n - 1) / 2));
}

std::vector<TypeMatrix> enumerate_types(int n, const AbelianGroup& k)
{
    FiniteAbelianGroup g(k);
    if (count_types(n, k) > Integer(1'000'000))
        throw ResourceGuard("more than 10^6 type matrices");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.emplace_back(i, j);

    std::vector<TypeMatrix> out;
    TypeMatrix c{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n * n), 0)};
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (s == slots.size())
        {
            out.push_back(c);
            return;
        }
        const auto [i, j] = slots[s];
        for (std::uint64_t v = 0; v < g.order(); ++v)
        {
            c.entries[static_cast<std::size_t>(i * n + j)] = v;
            c.entries[static_cast<std::size_t>(j * n + i)] = g.negate(v);
            rec(s + 1);
        }
    };
    rec(0);
    return out;
}

bool is_type_matrix(const TypeMatrix& c, const FiniteAbelianGroup& k)
{
    if (c.entries.size() != static_cast<std::size_t>(c.n * c.n))
        return false;
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j)
        {
            if (c.at(i, j) >= k.order())
                return false;
            if (i == j ? c.at(i, i) != 0 : c.at(j, i) != k.negate(c.at(i, j)))
                return false;
        }
    return true;
}

std::vector<Integer> strata_counts(int r, const AbelianGroup& k)
{
    std::vector<Integer> counts(static_cast<std::size_t>(r + 1), 0);
    for (const auto& c : enumerate_types(r, k))
    {
        int identity_rows = 0;
        for (int i = 0; i < r; ++i)
        {
            bool trivial = true;
            for (int j = 0; j < r; ++j)
                trivial = trivial && c.at(i, j) == 0;
            identity_rows += trivial;
        }
        counts[static_cast<std::size_t>(identity_rows)] += 1;
    }
    return counts;
}

int f2_rank(const TypeMatrix& c)
{
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(c.n), 0);
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j)
            if (c.at(i, j) % 2)
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    int rank = 0;
    for (int col = 0; col < c.n; ++col)
    {
        const std::uint64_t bit = std::uint64_t{1} << col;
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](auto r) { return r & bit; });
        if (pivot == rows.end())
            continue;
        std::iter_swap(rows.begin() + rank, pivot);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<std::size_t>(rank) && (rows[i] & bit))
                rows[i] ^= rows[static_cast<std::size_t>(rank)];
        ++rank;
    }
    return rank;
}

Integer n_lower_bound_su2(int n)
{
    require_positive(n, "N(SU(2), Z/2)");
    return 1 + a_count(n);
}

GradedGroup em_decomposition(EmTarget target, int n)
{
    require_positive(n, "Rep(Z^n, G)");
    GradedGroup pi;
    for (int i = 1; i <= n; ++i)
    {
        const auto b = binomial(n, i).convert_to<std::size_t>();
        switch (target)
        {
        case EmTarget::U:
            pi.set(static_cast<std::size_t>(i), AbelianGroup::free(b));
            break;
        case EmTarget::SU:
            if (i >= 2)
                pi.set(static_cast<std::size_t>(i), AbelianGroup::free(b));
            break;
        case EmTarget::Sp:
            if (i % 2 == 0)
                pi.set(static_cast<std::size_t>(i),
                       AbelianGroup(b, std::vector<Integer>(r_of(n, i).convert_to<std::size_t>(), 2)));
            break;
        }
    }
    return pi;
}

AbelianGroup abelianization(const FiniteGroup& g)
{
    const Index n = g.order();
    std::vector<Triplet> relations;
    Index col = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b, ++col)
        {
            relations.push_back({a, col, 1});
            relations.push_back({b, col, 1});
            relations.push_back({g.multiply(a, b), col, -1});
        }
    return cokernel(SparseIntMatrix::from_triplets(n, col, std::move(relations)));
}

} // namespace repspace
