#include "repspace/homology.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "repspace/errors.hpp"
#include "repspace/smith.hpp"

namespace repspace
{

Index ChainComplex::rank(int k) const
{
    return k >= 0 && k <= top_degree() ? ranks[static_cast<std::size_t>(k)] : 0;
}

SparseIntMatrix ChainComplex::boundary(int k) const
{
    if (k >= 1 && static_cast<std::size_t>(k) < boundaries.size())
        return boundaries[static_cast<std::size_t>(k)];
    return SparseIntMatrix(rank(k - 1), rank(k));
}

void ChainComplex::validate() const
{
    for (int k = 1; k <= top_degree(); ++k)
    {
        if (static_cast<std::size_t>(k) >= boundaries.size())
            break;
        const auto& d = boundaries[static_cast<std::size_t>(k)];
        if (d.rows() != rank(k - 1) || d.cols() != rank(k))
            throw DimensionMismatch("d_" + std::to_string(k) + " is " + std::to_string(d.rows()) + "x" +
                                    std::to_string(d.cols()) + ", expected " + std::to_string(rank(k - 1)) + "x" +
                                    std::to_string(rank(k)));
    }
    // d_{k-1} d_k column by column with a dense scratch accumulator.
    for (int k = 2; static_cast<std::size_t>(k) < boundaries.size() && k <= top_degree(); ++k)
    {
        const auto& lower = boundaries[static_cast<std::size_t>(k - 1)];
        const auto& upper = boundaries[static_cast<std::size_t>(k)];
        std::vector<Integer> acc(static_cast<std::size_t>(lower.rows()));
        std::vector<Index> touched;
        for (Index c = 0; c < upper.cols(); ++c)
        {
            touched.clear();
            for (const auto& [mid, a] : upper.column(c))
                for (const auto& [row, b] : lower.column(mid))
                {
                    acc[static_cast<std::size_t>(row)] += a * b;
                    touched.push_back(row);
                }
            for (Index row : touched)
            {
                if (acc[static_cast<std::size_t>(row)] != 0)
                    throw CompositionNotZero("d_" + std::to_string(k - 1) + " d_" + std::to_string(k) +
                                             " is nonzero on generator " + std::to_string(c));
            }
            for (Index row : touched)
                acc[static_cast<std::size_t>(row)] = 0;
        }
    }
}

long long ChainComplex::euler_characteristic() const
{
    long long chi = 0;
    for (int k = 0; k <= top_degree(); ++k)
        chi += (k % 2 ? -1 : 1) * static_cast<long long>(rank(k));
    return chi;
}

ChainComplex normalized_chains(const SimplicialSet& x)
{
    ChainComplex c;
    for (int k = 0; k <= x.dimension(); ++k)
        c.ranks.push_back(static_cast<Index>(x.count(k)));
    c.boundaries.resize(c.ranks.size());
    if (!c.ranks.empty())
        c.boundaries[0] = SparseIntMatrix(0, c.ranks[0]);
    for (int k = 1; k <= x.dimension(); ++k)
    {
        std::vector<SparseIntMatrix::Column> columns(x.count(k));
        std::vector<std::pair<Index, int>> entries;
        for (int s = 0; s < static_cast<int>(x.count(k)); ++s)
        {
            entries.clear();
            for (int i = 0; i <= k; ++i)
            {
                const auto& f = x.face(k, s, i);
                if (!f.is_degenerate())
                    entries.emplace_back(f.base, i % 2 ? -1 : 1);
            }
            std::sort(entries.begin(), entries.end());
            auto& column = columns[static_cast<std::size_t>(s)];
            for (const auto& [row, sign] : entries)
            {
                if (!column.empty() && column.back().first == row)
                    column.back().second += sign;
                else
                    column.emplace_back(row, Integer(sign));
            }
            std::erase_if(column, [](const auto& e) { return e.second == 0; });
        }
        c.boundaries[static_cast<std::size_t>(k)] =
            SparseIntMatrix::from_columns(c.ranks[static_cast<std::size_t>(k - 1)], std::move(columns));
    }
    return c;
}

namespace
{

// Invariants of d_1..d_top, computed in ascending order; get(k) blocks until d_k is done.
class BoundaryInvariants
{
public:
    BoundaryInvariants(const ChainComplex& c, unsigned threads) : c_(c), results_(static_cast<std::size_t>(c.top_degree() + 2))
    {
        const int top = c.top_degree();
        for (int k = 1; k <= top; ++k)
            futures_.push_back(promises_.emplace_back().get_future());
        if (threads <= 1 || top <= 1)
            return;
        for (unsigned t = 0; t < std::min<unsigned>(threads, static_cast<unsigned>(top)); ++t)
            workers_.emplace_back([this, top] {
                for (int k; (k = next_.fetch_add(1)) <= top;)
                    run(k);
            });
    }

    ~BoundaryInvariants()
    {
        for (auto& w : workers_)
            w.join();
    }

    const MatrixInvariants& get(int k)
    {
        if (k < 1 || k > c_.top_degree())
            return empty_;
        if (workers_.empty())
            while (computed_ < k)
                run(++computed_);
        auto& r = results_[static_cast<std::size_t>(k)];
        if (!r)
            r = futures_[static_cast<std::size_t>(k - 1)].get();
        return *r;
    }

private:
    void run(int k)
    {
        auto& p = promises_[static_cast<std::size_t>(k - 1)];
        try
        {
            p.set_value(matrix_invariants(c_.boundary(k)));
        }
        catch (...)
        {
            p.set_exception(std::current_exception());
        }
    }

    const ChainComplex& c_;
    std::vector<std::promise<MatrixInvariants>> promises_;
    std::vector<std::future<MatrixInvariants>> futures_;
    std::vector<std::optional<MatrixInvariants>> results_;
    std::vector<std::thread> workers_;
    std::atomic<int> next_{1};
    int computed_ = 0;
    MatrixInvariants empty_;
};

} // namespace

GradedGroup homology(const ChainComplex& c, const HomologyOptions& options)
{
    if (!options.trusted)
        c.validate();
    BoundaryInvariants inv(c, options.threads);
    std::vector<AbelianGroup> groups;
    for (int k = 0; k <= c.top_degree(); ++k)
    {
        const auto& out = inv.get(k);
        const auto& in = inv.get(k + 1);
        const Index free = c.rank(k) - out.rank - in.rank;
        groups.emplace_back(static_cast<std::size_t>(free), in.torsion);
        if (options.on_degree)
            options.on_degree(static_cast<std::size_t>(k), groups.back());
    }
    return GradedGroup(std::move(groups));
}

GradedGroup reduce(GradedGroup h)
{
    if (h[0].free_rank() > 0)
        h.set(0, AbelianGroup(h[0].free_rank() - 1, h[0].torsion()));
    return h;
}

GradedGroup reduced_homology(const ChainComplex& c, const HomologyOptions& options)
{
    HomologyOptions o = options;
    if (options.on_degree)
        o.on_degree = [&](std::size_t k, const AbelianGroup& g) {
            options.on_degree(k, k == 0 ? reduce(GradedGroup({g}))[0] : g);
        };
    return reduce(homology(c, o));
}

std::vector<Index> homology_mod_p(const ChainComplex& c, unsigned p)
{
    if (!is_prime(p))
        throw NotPrime(std::to_string(p) + " is not prime");
    c.validate();
    std::vector<Index> ranks(static_cast<std::size_t>(c.top_degree() + 2), 0);
    for (int k = 1; k <= c.top_degree(); ++k)
        ranks[static_cast<std::size_t>(k)] = rank_mod_p(c.boundary(k), p);
    std::vector<Index> dims;
    for (int k = 0; k <= c.top_degree(); ++k)
        dims.push_back(c.rank(k) - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)]);
    return dims;
}

GradedGroup homology(const SimplicialSet& x, const HomologyOptions& options)
{
    return homology(normalized_chains(x), options);
}

GradedGroup reduced_homology(const SimplicialSet& x, const HomologyOptions& options)
{
    return reduced_homology(normalized_chains(x), options);
}

std::vector<Index> universal_coefficients_mod_p(const GradedGroup& h, unsigned p, int top)
{
    std::vector<Index> dims;
    for (int k = 0; k <= top; ++k)
    {
        Index d = static_cast<Index>(h[static_cast<std::size_t>(k)].free_rank() + h[static_cast<std::size_t>(k)].p_rank(p));
        if (k > 0)
            d += static_cast<Index>(h[static_cast<std::size_t>(k - 1)].p_rank(p));
        dims.push_back(d);
    }
    return dims;
}

// ---------------------------------------------------------------------------
// Cache

HomologyCache::HomologyCache(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path HomologyCache::default_root()
{
    if (const char* env = std::getenv("REPSPACE_CACHE"); env && *env)
        return env;
    return ".repspace-cache";
}

std::string HomologyCache::key(const nlohmann::json& descriptor)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : descriptor.dump())
    {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
        out[static_cast<std::size_t>(i)] = digits[h & 15];
    return out;
}

std::filesystem::path HomologyCache::path_for(const std::string& key) const
{
    return root_ / (key + ".json");
}

std::optional<GradedGroup> HomologyCache::load(const nlohmann::json& descriptor) const
{
    const std::string k = key(descriptor);
    const auto path = path_for(k);
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    try
    {
        const auto j = nlohmann::json::parse(in);
        if (j.at("key").get<std::string>() != k || j.at("descriptor") != descriptor)
            throw CacheCorrupt("entry " + path.string() + " belongs to another descriptor");
        if (j.at("engine_version").get<std::string>() != kEngineVersion)
            return std::nullopt;
        return j.at("graded_group").get<GradedGroup>();
    }
    catch (const CacheCorrupt&)
    {
        throw;
    }
    catch (const std::exception& e)
    {
        throw CacheCorrupt("unreadable entry " + path.string() + ": " + e.what());
    }
}

void HomologyCache::store(const nlohmann::json& descriptor, const GradedGroup& h) const
{
    const std::string k = key(descriptor);
    const nlohmann::json entry = {
        {"key", k}, {"descriptor", descriptor}, {"graded_group", h}, {"engine_version", kEngineVersion}};
    std::lock_guard lock(write_mutex_);
    std::filesystem::create_directories(root_);
    std::ostringstream suffix;
    suffix << ".tmp" << std::this_thread::get_id();
    const auto tmp = path_for(k).string() + suffix.str();
    {
        std::ofstream out(tmp);
        out << entry.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path_for(k));
}

GradedGroup HomologyCache::get_or_compute(const nlohmann::json& descriptor, const std::function<GradedGroup()>& compute,
                                          bool* hit) const
{
    try
    {
        if (auto cached = load(descriptor))
        {
            if (hit)
                *hit = true;
            return *cached;
        }
    }
    catch (const CacheCorrupt&)
    {
        // fall through and overwrite
    }
    if (hit)
        *hit = false;
    GradedGroup h = compute();
    store(descriptor, h);
    return h;
}

} // namespace repspace
