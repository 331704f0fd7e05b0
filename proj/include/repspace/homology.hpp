#pragma once

#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "repspace/abelian_group.hpp"
#include "repspace/int_matrix.hpp"
#include "repspace/simplicial_set.hpp"

namespace repspace
{

/**
 * Bounded chain complex of free abelian groups in degrees 0..top.
 * boundaries[k] is d_k : C_k -> C_{k-1}; boundaries[0] is the 0 x ranks[0] map.
 */
struct ChainComplex
{
    std::vector<Index> ranks;
    std::vector<SparseIntMatrix> boundaries;

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
    Index rank(int k) const;
    /// d_k, including the zero maps out of degree 0 and into the top degree.
    SparseIntMatrix boundary(int k) const;

    /// Shapes match and d_k d_{k+1} = 0. Throws DimensionMismatch or CompositionNotZero.
    void validate() const;
    /// Sum of (-1)^k rank C_k.
    long long euler_characteristic() const;
};

/// One generator per nondegenerate simplex, d = sum (-1)^i d_i with degenerate faces dropped.
ChainComplex normalized_chains(const SimplicialSet& x);

/// Called with each H_k as soon as it is known, lowest degree first.
using DegreeCallback = std::function<void(std::size_t, const AbelianGroup&)>;

struct HomologyOptions
{
    /// Boundary matrices are reduced on up to this many threads.
    unsigned threads = 1;
    DegreeCallback on_degree;
    /// Skip the d∘d = 0 check (the caller has already validated).
    bool trusted = false;
};

GradedGroup homology(const ChainComplex& c, const HomologyOptions& options = {});
GradedGroup reduced_homology(const ChainComplex& c, const HomologyOptions& options = {});
/// Reduces the free rank of H_0 by one when it is positive.
GradedGroup reduce(GradedGroup h);
/// dim H_k(C; F_p) for k = 0..top. Throws NotPrime.
std::vector<Index> homology_mod_p(const ChainComplex& c, unsigned p);

GradedGroup homology(const SimplicialSet& x, const HomologyOptions& options = {});
GradedGroup reduced_homology(const SimplicialSet& x, const HomologyOptions& options = {});

/// dim H_k(-; F_p) predicted by universal coefficients from integral homology, degrees 0..top.
std::vector<Index> universal_coefficients_mod_p(const GradedGroup& h, unsigned p, int top);

inline constexpr const char* kEngineVersion = "1";

/**
 * Homology results on disk, one JSON file per descriptor hash.
 *
 * A file holds {key, descriptor, graded_group, engine_version}. Writes go
 * through a temporary file and a rename, so concurrent readers never see a
 * partial entry.
 */
class HomologyCache
{
public:
    explicit HomologyCache(std::filesystem::path root);

    /// REPSPACE_CACHE if set, otherwise ".repspace-cache".
    static std::filesystem::path default_root();
    /// 64-bit FNV-1a of the compact JSON dump, as 16 hex digits.
    static std::string key(const nlohmann::json& descriptor);

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path path_for(const std::string& key) const;

    /// Throws CacheCorrupt for an unreadable or mismatched entry.
    std::optional<GradedGroup> load(const nlohmann::json& descriptor) const;
    void store(const nlohmann::json& descriptor, const GradedGroup& h) const;

    /// Cache hit, or compute and store. A corrupt entry is recomputed and overwritten.
    GradedGroup get_or_compute(const nlohmann::json& descriptor, const std::function<GradedGroup()>& compute,
                               bool* hit = nullptr) const;

private:
    std::filesystem::path root_;
    mutable std::mutex write_mutex_;
};

} // namespace repspace
