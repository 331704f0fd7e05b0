#include "repspace/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "repspace/errors.hpp"

namespace repspace
{

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name))
{
    const int n = order();
    if (n == 0)
        throw ActionInvalid("group must be nonempty");
    for (int a = 0; a < n; ++a)
    {
        if (static_cast<int>(table_[static_cast<std::size_t>(a)].size()) != n)
            throw ActionInvalid("multiplication table is not square");
        if (multiply(0, a) != a || multiply(a, 0) != a)
            throw ActionInvalid("element 0 is not the identity");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int b = 0; b < n; ++b)
        {
            int c = multiply(a, b);
            if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)])
                throw ActionInvalid("multiplication table row is not a permutation");
            seen[static_cast<std::size_t>(c)] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
                    throw ActionInvalid("multiplication is not associative");
}

int FiniteGroup::inverse(int a) const
{
    for (int b = 0; b < order(); ++b)
        if (multiply(a, b) == 0)
            return b;
    throw ActionInvalid("element without inverse");
}

const std::vector<int>& FiniteGroup::permutation(int g) const
{
    static const std::vector<int> none;
    return permutations_.empty() ? none : permutations_[static_cast<std::size_t>(g)];
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return FiniteGroup(std::move(t), "Z/" + std::to_string(n));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators, std::string name)
{
    if (generators.empty())
        return {};
    const std::size_t degree = generators.front().size();
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);

    auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(q.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            r[i] = p[static_cast<std::size_t>(q[i])];
        return r;
    };

    std::vector<std::vector<int>> elements{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (const auto& g : generators)
        {
            auto h = compose(g, elements[i]);
            if (index.emplace(h, static_cast<int>(elements.size())).second)
                elements.push_back(h);
        }

    const std::size_t n = elements.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = index.at(compose(elements[a], elements[b]));
    FiniteGroup g(std::move(table), std::move(name));
    g.permutations_ = std::move(elements);
    return g;
}

FiniteGroup FiniteGroup::symmetric(int m)
{
    if (m <= 1)
    {
        FiniteGroup g = from_permutations({std::vector<int>(static_cast<std::size_t>(std::max(m, 0)), 0)}, "S_" + std::to_string(m));
        if (m == 1)
            g.permutations_ = {{0}};
        return g;
    }
    std::vector<int> swap(static_cast<std::size_t>(m)), cycle(static_cast<std::size_t>(m));
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < m; ++i)
        cycle[static_cast<std::size_t>(i)] = (i + 1) % m;
    return from_permutations({swap, cycle}, "S_" + std::to_string(m));
}

FiniteGroup FiniteGroup::quaternion_q8()
{
    // Elements: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k, encoded (unit, sign).
    // unit 0..3 = 1,i,j,k; products of units from the quaternion rules.
    static const int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
        {
            int ua = a / 2, ub = b / 2;
            int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * unit_sign[ua][ub];
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 2 * unit_product[ua][ub] + (sign < 0 ? 1 : 0);
        }
    return FiniteGroup(std::move(table), "Q8");
}

} // namespace repspace
