#include "repspace/abelian_group.hpp"

#include <limits>
#include <sstream>

#include "repspace/errors.hpp"

namespace repspace
{

namespace
{

std::vector<Integer> invariant_factor_chain(std::vector<Integer> orders)
{
    // Pairwise (gcd, lcm) replacement keeps every p-primary part and leaves
    // orders[i] | orders[j] for i < j.
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j)
        {
            Integer g = gcd(orders[i], orders[j]);
            Integer l = orders[i] / g * orders[j];
            orders[i] = std::move(g);
            orders[j] = std::move(l);
        }
    std::erase_if(orders, [](const Integer& d) { return d == 1; });
    return orders;
}

} // namespace

AbelianGroup::AbelianGroup(std::size_t free_rank, const std::vector<Integer>& cyclic_orders)
    : free_rank_(free_rank)
{
    std::vector<Integer> finite;
    for (const auto& d : cyclic_orders)
    {
        Integer a = abs(d);
        if (a == 0)
            ++free_rank_;
        else if (a != 1)
            finite.push_back(a);
    }
    torsion_ = invariant_factor_chain(std::move(finite));
}

AbelianGroup AbelianGroup::cyclic(const Integer& order)
{
    return AbelianGroup(0, {order});
}

std::size_t AbelianGroup::p_rank(unsigned p) const
{
    std::size_t n = 0;
    for (const auto& d : torsion_)
        if (d % p == 0)
            ++n;
    return n;
}

AbelianGroup AbelianGroup::operator+(const AbelianGroup& other) const
{
    std::vector<Integer> orders = torsion_;
    orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
    return AbelianGroup(free_rank_ + other.free_rank_, orders);
}

AbelianGroup AbelianGroup::power(std::size_t k) const
{
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < k; ++i)
        orders.insert(orders.end(), torsion_.begin(), torsion_.end());
    return AbelianGroup(free_rank_ * k, orders);
}

std::string AbelianGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0)
    {
        os << "Z";
        if (free_rank_ > 1)
            os << "^" << free_rank_;
        first = false;
    }
    // Runs of equal factors print as (Z/d)^k.
    for (std::size_t i = 0; i < torsion_.size();)
    {
        std::size_t j = i;
        while (j < torsion_.size() && torsion_[j] == torsion_[i])
            ++j;
        if (!first)
            os << " ⊕ ";
        first = false;
        if (j - i == 1)
            os << "Z/" << torsion_[i];
        else
            os << "(Z/" << torsion_[i] << ")^" << (j - i);
        i = j;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g)
{
    return os << g.to_string();
}

GradedGroup::GradedGroup(std::vector<AbelianGroup> groups) : groups_(std::move(groups))
{
    trim();
}

void GradedGroup::trim()
{
    while (!groups_.empty() && groups_.back().is_trivial())
        groups_.pop_back();
}

const AbelianGroup& GradedGroup::operator[](std::size_t k) const
{
    static const AbelianGroup zero;
    return k < groups_.size() ? groups_[k] : zero;
}

void GradedGroup::set(std::size_t k, AbelianGroup g)
{
    if (k >= groups_.size())
        groups_.resize(k + 1);
    groups_[k] = std::move(g);
    trim();
}

GradedGroup GradedGroup::operator+(const GradedGroup& other) const
{
    std::vector<AbelianGroup> out(std::max(size(), other.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = (*this)[k] + other[k];
    return GradedGroup(std::move(out));
}

GradedGroup GradedGroup::power(std::size_t k) const
{
    std::vector<AbelianGroup> out;
    out.reserve(size());
    for (const auto& g : groups_)
        out.push_back(g.power(k));
    return GradedGroup(std::move(out));
}

GradedGroup GradedGroup::shifted(std::size_t s) const
{
    if (is_trivial())
        return {};
    std::vector<AbelianGroup> out(s);
    out.insert(out.end(), groups_.begin(), groups_.end());
    return GradedGroup(std::move(out));
}

std::vector<std::size_t> GradedGroup::betti_numbers() const
{
    std::vector<std::size_t> b;
    for (const auto& g : groups_)
        b.push_back(g.free_rank());
    return b;
}

std::string GradedGroup::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < groups_.size(); ++k)
        os << (k ? ", " : "") << groups_[k];
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedGroup& g)
{
    return os << g.to_string();
}

namespace
{

nlohmann::json integer_to_json(const Integer& v)
{
    if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw CacheCorrupt("expected an integer");
}

} // namespace

void to_json(nlohmann::json& j, const AbelianGroup& g)
{
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& d : g.torsion())
        torsion.push_back(integer_to_json(d));
    j = {{"free_rank", g.free_rank()}, {"torsion", torsion}};
}

void from_json(const nlohmann::json& j, AbelianGroup& g)
{
    std::vector<Integer> torsion;
    for (const auto& d : j.at("torsion"))
        torsion.push_back(integer_from_json(d));
    AbelianGroup parsed(j.at("free_rank").get<std::size_t>(), torsion);
    if (parsed.torsion() != torsion)
        throw CacheCorrupt("torsion list is not an invariant-factor chain");
    g = std::move(parsed);
}

void to_json(nlohmann::json& j, const GradedGroup& g)
{
    j = nlohmann::json::array();
    for (const auto& a : g.groups())
        j.push_back(a);
}

void from_json(const nlohmann::json& j, GradedGroup& g)
{
    g = GradedGroup(j.get<std::vector<AbelianGroup>>());
}

} // namespace repspace
