#pragma once

#include <string>
#include <vector>

namespace repspace
{

/**
 * Finite group given by its multiplication table. Element 0 is the identity.
 * Groups built from permutations keep them, so actions can permute
 * coordinates.
 */
class FiniteGroup
{
public:
    FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}
    /// table[a][b] = a * b. Throws ActionInvalid if the table is not a group.
    explicit FiniteGroup(std::vector<std::vector<int>> table, std::string name = "");

    static FiniteGroup trivial() { return {}; }
    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int m);
    static FiniteGroup quaternion_q8();
    /// Closure of the given permutations under composition (p*q = p after q).
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators, std::string name = "");

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return 0; }
    int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inverse(int a) const;
    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::string& name() const { return name_; }

    /// Permutation of element g, empty when the group was not built from permutations.
    const std::vector<int>& permutation(int g) const;
    bool has_permutations() const { return !permutations_.empty(); }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

private:
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> permutations_;
    std::string name_;
};

} // namespace repspace
