#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle
{

// All nondecreasing surjections [k] -> [d], as value sequences of length k+1.
inline std::vector<std::vector<int>> surjections(int k, int d)
{
    std::vector<std::vector<int>> out;
    std::vector<int> seq(static_cast<std::size_t>(k + 1));
    std::function<void(int, int)> rec = [&](int t, int v) {
        if (t == k + 1)
        {
            if (v == d)
                out.push_back(seq);
            return;
        }
        for (int w = v; w <= std::min(v + 1, d); ++w)
        {
            if (t == 0 && w != 0)
                continue;
            seq[static_cast<std::size_t>(t)] = w;
            rec(t + 1, w);
        }
    };
    rec(0, 0);
    return out;
}

/**
 * Nondegenerate simplices per dimension of a product, from the nondegenerate
 * counts of each factor: a tuple of k-simplices is degenerate exactly when
 * every coordinate repeats a vertex at the same position t, t+1.
 */
inline std::vector<std::size_t> product_f_vector(const std::vector<std::vector<std::size_t>>& factor_f)
{
    int top = 0;
    for (const auto& f : factor_f)
        top += static_cast<int>(f.size()) - 1;
    std::vector<std::size_t> result;
    for (int k = 0; k <= top; ++k)
    {
        // per factor: list of (multiplicity, sequence)
        std::vector<std::vector<std::pair<std::size_t, std::vector<int>>>> options(factor_f.size());
        for (std::size_t i = 0; i < factor_f.size(); ++i)
            for (int d = 0; d < static_cast<int>(factor_f[i].size()) && d <= k; ++d)
                if (factor_f[i][static_cast<std::size_t>(d)] > 0)
                    for (auto& s : surjections(k, d))
                        options[i].emplace_back(factor_f[i][static_cast<std::size_t>(d)], s);
        std::size_t count = 0;
        std::vector<const std::vector<int>*> chosen(factor_f.size());
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t mult) {
            if (i == factor_f.size())
            {
                for (int t = 0; t < k; ++t)
                {
                    bool all_repeat = true;
                    for (auto* s : chosen)
                        all_repeat = all_repeat && (*s)[static_cast<std::size_t>(t)] == (*s)[static_cast<std::size_t>(t + 1)];
                    if (all_repeat)
                        return;
                }
                count += mult;
                return;
            }
            for (const auto& [m, s] : options[i])
            {
                chosen[i] = &s;
                rec(i + 1, mult * m);
            }
        };
        rec(0, 1);
        result.push_back(count);
    }
    while (!result.empty() && result.back() == 0)
        result.pop_back();
    return result;
}

} // namespace oracle
