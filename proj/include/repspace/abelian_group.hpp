#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "repspace/integer.hpp"

namespace repspace
{

/**
 * Finitely generated abelian group Z^r + Z/d1 + ... + Z/dt in invariant-factor
 * form: every d_i >= 2 and d_1 | d_2 | ... | d_t.
 *
 * Construction normalizes arbitrary cyclic decompositions, so two groups
 * compare equal exactly when they are isomorphic.
 */
class AbelianGroup
{
public:
    AbelianGroup() = default;
    /// Accepts any list of cyclic orders; 0 means Z, 1 is dropped.
    AbelianGroup(std::size_t free_rank, const std::vector<Integer>& cyclic_orders);

    static AbelianGroup trivial() { return {}; }
    static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank, {}); }
    static AbelianGroup cyclic(const Integer& order);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }

    /// Number of invariant factors divisible by p.
    std::size_t p_rank(unsigned p) const;

    AbelianGroup operator+(const AbelianGroup& other) const;
    AbelianGroup& operator+=(const AbelianGroup& other) { return *this = *this + other; }
    /// Direct sum of k copies.
    AbelianGroup power(std::size_t k) const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    /// "Z^r ⊕ Z/d1 ⊕ ..." ; "0" for the trivial group.
    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);

/**
 * Degree-indexed groups, e.g. a homology table. Trailing trivial groups are
 * trimmed, so the empty table is the all-trivial one.
 */
class GradedGroup
{
public:
    GradedGroup() = default;
    explicit GradedGroup(std::vector<AbelianGroup> groups);

    /// Group in degree k, trivial past the top.
    const AbelianGroup& operator[](std::size_t k) const;
    std::size_t size() const { return groups_.size(); }
    bool is_trivial() const { return groups_.empty(); }
    const std::vector<AbelianGroup>& groups() const { return groups_; }

    void set(std::size_t k, AbelianGroup g);

    GradedGroup operator+(const GradedGroup& other) const;
    GradedGroup& operator+=(const GradedGroup& other) { return *this = *this + other; }
    GradedGroup power(std::size_t k) const;
    /// Degree shift by s: result[k + s] = (*this)[k].
    GradedGroup shifted(std::size_t s) const;

    std::vector<std::size_t> betti_numbers() const;

    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<AbelianGroup> groups_;
};

std::ostream& operator<<(std::ostream& os, const GradedGroup& g);

void to_json(nlohmann::json& j, const AbelianGroup& g);
void from_json(const nlohmann::json& j, AbelianGroup& g);
void to_json(nlohmann::json& j, const GradedGroup& g);
void from_json(const nlohmann::json& j, GradedGroup& g);

} // namespace repspace
