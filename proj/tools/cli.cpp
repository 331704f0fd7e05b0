#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "repspace/catalog.hpp"
#include "repspace/counting.hpp"
#include "repspace/errors.hpp"
#include "repspace/splitting.hpp"
#include "repspace/su2.hpp"
#include "repspace/suites.hpp"

namespace repspace::cli
{

namespace
{

enum class Format
{
    Json,
    Csv,
    Markdown
};

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    return Format::Markdown;
}

// Exact integers: JSON numbers when they fit in 64 bits, decimal strings otherwise.
nlohmann::json exact(const Integer& v)
{
    if (v <= Integer(std::numeric_limits<std::int64_t>::max()) && v >= Integer(std::numeric_limits<std::int64_t>::min()))
        return v.convert_to<std::int64_t>();
    return v.str();
}

std::string torsion_list(const AbelianGroup& g)
{
    std::string s;
    for (const auto& d : g.torsion())
        s += (s.empty() ? "" : " ") + d.str();
    return s;
}

void print_graded(std::ostream& out, Format format, const GradedGroup& h, const std::string& title)
{
    if (format == Format::Csv)
    {
        out << "degree,free_rank,torsion,group\n";
        for (std::size_t k = 0; k < h.size(); ++k)
            out << k << ',' << h[k].free_rank() << ',' << torsion_list(h[k]) << ',' << h[k].to_string() << '\n';
        return;
    }
    out << "### " << title << "\n\n| degree | group |\n|---:|:---|\n";
    for (std::size_t k = 0; k < h.size(); ++k)
        out << "| " << k << " | " << h[k].to_string() << " |\n";
}

nlohmann::json strip_timing(nlohmann::json j)
{
    j.erase("seconds");
    return j;
}

struct Common
{
    std::string format = "markdown";
    std::string cache_dir;
    unsigned jobs = 1;
    std::uint64_t seed = 42;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}))
        ->capture_default_str();
    cmd->add_option("--cache-dir", c.cache_dir, "Result cache directory (overrides REPSPACE_CACHE)");
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

int cmd_homology(const Common& c, const std::string& descriptor, bool no_cache, unsigned mod_p, std::ostream& out)
{
    const CatalogSpace space = build_space(descriptor);
    HomologyOptions options;
    options.threads = c.jobs;
    std::optional<HomologyCache> cache;
    if (!no_cache)
        cache.emplace(c.cache_dir.empty() ? HomologyCache::default_root() : std::filesystem::path(c.cache_dir));
    const GradedGroup h = catalog_homology(space, cache ? &*cache : nullptr, options);
    const std::string name = space.descriptor.to_string();

    std::vector<Index> betti_p;
    if (mod_p)
    {
        if (space.fixed)
        {
            // Fixed data has no chains; homology_mod_p would do the primality check otherwise.
            bool prime = mod_p >= 2;
            for (unsigned d = 2; prime && d * d <= mod_p; ++d)
                prime = mod_p % d != 0;
            if (!prime)
                throw NotPrime(std::to_string(mod_p) + " is not prime");
            betti_p = universal_coefficients_mod_p(h, mod_p, std::max(0, static_cast<int>(h.size()) - 1));
        }
        else
            betti_p = homology_mod_p(space.chains(), mod_p);
    }

    const Format format = parse_format(c.format);
    if (format == Format::Json)
    {
        nlohmann::json j = {{"space", name},
                            {"engine_version", kEngineVersion},
                            {"homology", h},
                            {"reduced_homology", reduce(h)}};
        if (mod_p)
            j["mod_p"] = {{"p", mod_p}, {"betti", betti_p}};
        out << j.dump(2) << '\n';
        return kSuccess;
    }
    print_graded(out, format, h, "H_*(" + name + ")");
    if (mod_p)
    {
        out << (format == Format::Csv ? "\ndegree,betti_mod_" : "\n| degree | dim H_k(F_") << mod_p
            << (format == Format::Csv ? "\n" : ") |\n|---:|---:|\n");
        for (std::size_t k = 0; k < betti_p.size(); ++k)
            out << (format == Format::Csv ? "" : "| ") << k << (format == Format::Csv ? "," : " | ") << betti_p[k]
                << (format == Format::Csv ? "\n" : " |\n");
    }
    return kSuccess;
}

int cmd_counts(const Common& c, int n_max, std::ostream& out)
{
    if (n_max < 1)
        throw Unsupported("--n must be at least 1");
    if (n_max > 1000)
        throw ResourceGuard("counts are tabulated for n <= 1000");
    struct Row
    {
        std::string name;
        std::vector<std::optional<Integer>> values;
    };
    std::vector<Row> rows = {{"A", {}}, {"C", {}}, {"D", {}}, {"K", {}}, {"N(n,1,2)", {}},
                             {"N(n,1,3)", {}}, {"1+A", {}}, {"|T(n,Z/2)|", {}}};
    for (int n = 1; n <= n_max; ++n)
    {
        rows[0].values.push_back(a_count(n));
        rows[1].values.push_back(c_count(n));
        rows[2].values.push_back(d_count(n));
        rows[3].values.push_back(k_count(n));
        rows[4].values.push_back(n >= 2 ? std::optional<Integer>(n_central_product(n, 1, 2)) : std::nullopt);
        rows[5].values.push_back(n >= 2 ? std::optional<Integer>(n_central_product(n, 1, 3)) : std::nullopt);
        rows[6].values.push_back(n_lower_bound_su2(n));
        rows[7].values.push_back(ipow(Integer(2), static_cast<unsigned>(n * (n - 1) / 2)));
    }
    const int strata_max = std::min(n_max, 5);
    const Format format = parse_format(c.format);

    if (format == Format::Json)
    {
        nlohmann::json seq = nlohmann::json::object();
        for (const auto& row : rows)
        {
            nlohmann::json values = nlohmann::json::array();
            for (const auto& v : row.values)
                values.push_back(v ? exact(*v) : nlohmann::json());
            seq[row.name] = values;
        }
        nlohmann::json r = nlohmann::json::object(), strata = nlohmann::json::object();
        for (int n = 1; n <= n_max; ++n)
        {
            nlohmann::json values = nlohmann::json::array();
            for (int i = 1; i <= n; ++i)
                values.push_back(exact(r_of(n, i)));
            r[std::to_string(n)] = values;
        }
        for (int n = 1; n <= strata_max; ++n)
        {
            nlohmann::json values = nlohmann::json::array();
            for (const auto& v : strata_counts(n, AbelianGroup::cyclic(2)))
                values.push_back(exact(v));
            strata[std::to_string(n)] = values;
        }
        out << nlohmann::json{{"n_max", n_max}, {"sequences", seq}, {"r", r}, {"strata_z2", strata}}.dump(2) << '\n';
        return kSuccess;
    }

    const bool csv = format == Format::Csv;
    auto cell = [](const std::optional<Integer>& v) { return v ? v->str() : std::string("-"); };
    out << (csv ? "sequence" : "| sequence");
    for (int n = 1; n <= n_max; ++n)
        out << (csv ? "," : " | ") << n;
    out << (csv ? "\n" : " |\n");
    if (!csv)
    {
        out << "|:---";
        for (int n = 1; n <= n_max; ++n)
            out << "|---:";
        out << "|\n";
    }
    for (const auto& row : rows)
    {
        out << (csv ? "" : "| ") << row.name;
        for (const auto& v : row.values)
            out << (csv ? "," : " | ") << cell(v);
        out << (csv ? "\n" : " |\n");
    }

    out << (csv ? "\nn,i,r\n" : "\n| n | r(1) .. r(n) |\n|---:|:---|\n");
    for (int n = 1; n <= n_max; ++n)
    {
        if (csv)
            for (int i = 1; i <= n; ++i)
                out << n << ',' << i << ',' << r_of(n, i) << '\n';
        else
        {
            out << "| " << n << " |";
            for (int i = 1; i <= n; ++i)
                out << ' ' << r_of(n, i);
            out << " |\n";
        }
    }
    out << (csv ? "\nr,strata_z2\n" : "\n| r | strata of T(r,Z/2) by identity rows |\n|---:|:---|\n");
    for (int n = 1; n <= strata_max; ++n)
    {
        std::string s;
        for (const auto& v : strata_counts(n, AbelianGroup::cyclic(2)))
            s += (s.empty() ? "" : " ") + v.str();
        out << (csv ? "" : "| ") << n << (csv ? "," : " | ") << s << (csv ? "\n" : " |\n");
    }
    return kSuccess;
}

int cmd_verify(const Common& c, const std::string& suite, std::ostream& out)
{
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    for (const auto& n : names)
    {
        const auto known = suite_names();
        if (std::find(known.begin(), known.end(), n) == known.end())
            throw UnknownSpace("unknown suite '" + n + "' (one of snf, simplicial, homology-prop, rep-u, rep-sp, "
                               "splitting, counts, su2, all)");
    }

    // Suites share a bounded pool; each report keeps its slot so output order is fixed.
    std::vector<Report> reports(names.size());
    std::vector<std::exception_ptr> errors(names.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < names.size();)
        {
            try
            {
                reports[i] = run_suite(names[i], c.seed);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(c.jobs, names.size()); ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    const bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
    const Format format = parse_format(c.format);
    if (format == Format::Json)
    {
        nlohmann::json list = nlohmann::json::array();
        for (std::size_t i = 0; i < names.size(); ++i)
        {
            auto j = strip_timing(reports[i].to_json());
            j["suite"] = names[i];
            list.push_back(std::move(j));
        }
        out << nlohmann::json{{"passed", ok}, {"suites", list}}.dump(2) << '\n';
    }
    else if (format == Format::Csv)
    {
        out << "suite,check,passed\n";
        for (std::size_t i = 0; i < names.size(); ++i)
            for (const auto& check : reports[i].checks)
                out << names[i] << ",\"" << check.name << "\"," << (check.passed() ? "true" : "false") << '\n';
    }
    else
    {
        for (const auto& r : reports)
            out << r.to_table() << '\n';
        out << (ok ? "all checks passed" : "FAILED") << '\n';
    }
    return ok ? kSuccess : kVerificationFailed;
}

int cmd_catalog(const Common& c, const std::string& group, int n, std::ostream& out)
{
    const CatalogEntry e = rank_one_catalog(parse_rank_one(group), n);
    const Format format = parse_format(c.format);
    if (format == Format::Json)
    {
        nlohmann::json j = {{"group", group}, {"n", n}, {"description", e.description}, {"reduced_homology", e.reduced}};
        if (e.modulo_conjugation)
            j["modulo_conjugation"] = *e.modulo_conjugation;
        out << j.dump(2) << '\n';
        return kSuccess;
    }
    if (format == Format::Markdown)
        out << "stable factor for " << group << ", n = " << n << ": " << e.description << "\n\n";
    else
        out << "# " << e.description << '\n';
    print_graded(out, format, e.reduced, "reduced homology");
    if (e.modulo_conjugation)
    {
        out << '\n';
        print_graded(out, format, *e.modulo_conjugation, "reduced homology modulo conjugation");
    }
    return kSuccess;
}

int cmd_psi(int n, long runs, std::uint64_t seed, std::ostream& out)
{
    const PsiReport r = verify_psi(n, runs, seed);
    out << r.to_json().dump(2) << '\n';
    return r.failures == 0 ? kSuccess : kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homology of spaces of commuting elements in Lie groups.\n\n" + descriptor_help(), "repspace"};
    app.require_subcommand(1);

    Common common;
    std::string descriptor, suite, group;
    bool no_cache = false;
    unsigned mod_p = 0;
    int n = 4, m = 2;
    long runs = 1000;

    auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a catalog space");
    homology_cmd->add_option("space", descriptor, "Space descriptor, e.g. torus_conj_quotient(n=3)")->required();
    homology_cmd->add_flag("--no-cache", no_cache, "Do not read or write the result cache");
    homology_cmd->add_option("--mod", mod_p, "Also print Betti numbers over F_p");
    add_common(homology_cmd, common);

    auto* counts_cmd = app.add_subcommand("counts", "Tables of the component counts");
    counts_cmd->add_option("--n", n, "Largest n")->capture_default_str();
    counts_cmd->add_flag("--table", "Tabular output (the default)");
    add_common(counts_cmd, common);

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "snf, simplicial, homology-prop, rep-u, rep-sp, splitting, counts, su2 or all")
        ->required();
    add_common(verify_cmd, common);

    auto* catalog_cmd = app.add_subcommand("catalog", "Stable factor of a rank-one group");
    catalog_cmd->add_option("group", group, "S1, SU2, SO3 or B_SU2_Z2")->required();
    catalog_cmd->add_option("--n", n, "Tuple length")->capture_default_str();
    add_common(catalog_cmd, common);

    auto* su2_cmd = app.add_subcommand("su2", "Quaternion checks");
    su2_cmd->require_subcommand(1);
    auto* psi_cmd = su2_cmd->add_subcommand("verify-psi", "Randomized psi realizations of every type");
    psi_cmd->add_option("--n", n, "Tuple length")->capture_default_str();
    psi_cmd->add_option("--runs", runs, "Number of runs")->capture_default_str();
    psi_cmd->add_option("--m", m, "Unused; accepted for interface uniformity");
    add_common(psi_cmd, common);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try
    {
        if (*homology_cmd)
            return cmd_homology(common, descriptor, no_cache, mod_p, out);
        if (*counts_cmd)
            return cmd_counts(common, n, out);
        if (*verify_cmd)
            return cmd_verify(common, suite, out);
        if (*catalog_cmd)
            return cmd_catalog(common, group, n, out);
        if (*psi_cmd)
            return cmd_psi(n, runs, common.seed, out);
    }
    catch (const ResourceGuard& e)
    {
        err << e.what() << '\n';
        return kResourceGuard;
    }
    catch (const UnknownSpace& e)
    {
        err << e.what() << '\n';
        return kUsage;
    }
    catch (const Unsupported& e)
    {
        err << e.what() << '\n';
        return kUsage;
    }
    catch (const NotPrime& e)
    {
        err << e.what() << '\n';
        return kUsage;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsage;
}

} // namespace repspace::cli
