#include "relgw/cli.hpp"

#include "relgw/counts.hpp"
#include "relgw/gathmann.hpp"
#include "relgw/interp.hpp"
#include "relgw/verify/checks.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace relgw::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DegreeRange {
    int first = 0;
    int last = 0;
};

DegreeRange parse_range(const std::string& text)
{
    auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            int v = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return {v, v};
        }
        DegreeRange r;
        std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        r.first = std::stoi(lo, &used);
        if (used != lo.size())
            throw std::invalid_argument(text);
        r.last = std::stoi(hi, &used);
        if (used != hi.size())
            throw std::invalid_argument(text);
        return r;
    } catch (const std::exception&) {
        throw UsageError("invalid range '" + text + "' (expected a..b)");
    }
}

std::vector<int> expand(const DegreeRange& r)
{
    if (r.first < 1 || r.last < r.first)
        throw UsageError("invalid range " + std::to_string(r.first) + ".." + std::to_string(r.last));
    std::vector<int> out;
    for (int d = r.first; d <= r.last; ++d)
        out.push_back(d);
    return out;
}

// Opt-in memo persistence: load before computing, write back afterwards.
class CacheSession {
public:
    CacheSession(RelativeInvariantEngine& engine, std::optional<std::filesystem::path> path)
        : engine_(engine)
        , path_(std::move(path))
    {
        if (path_ && std::filesystem::exists(*path_))
            engine_.load_cache(*path_);
    }
    void commit() const
    {
        if (path_)
            engine_.save_cache(*path_);
    }

private:
    RelativeInvariantEngine& engine_;
    std::optional<std::filesystem::path> path_;
};

void require_positive(const char* name, int v)
{
    if (v < 1)
        throw UsageError(std::string("--") + name + " must be >= 1");
}

void require_non_negative(const char* name, int v)
{
    if (v < 0)
        throw UsageError(std::string("--") + name + " must be >= 0");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Genus-0 relative Gromov-Witten invariants of P^s relative to a hypersurface", "relgw"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_flag;
    app.add_option("--cache", cache_flag, "memo cache file (default: $RELGW_CACHE)");

    InvariantKey key;
    std::string inv_format = "json";
    auto* inv = app.add_subcommand("invariant", "evaluate one relative invariant I(s,d; m,n,k,j)");
    inv->add_option("--s", key.s, "ambient dimension")->required();
    inv->add_option("--d", key.d, "hypersurface degree")->required();
    inv->add_option("--m", key.m, "contact order")->required();
    inv->add_option("--n", key.n, "curve degree")->required();
    inv->add_option("--k", key.k, "power of ev*(Y)")->required();
    inv->add_option("--j", key.j, "power of psi")->required();
    inv->add_option("--format", inv_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    int tsn_s = 0, tsn_n = 0, tsn_d = 0;
    auto* tsn = app.add_subcommand("tsn", "virtual number T_{s,n}(d) of maximal-contact curves");
    tsn->add_option("--s", tsn_s)->required();
    tsn->add_option("--n", tsn_n)->required();
    tsn->add_option("--d", tsn_d)->required();

    std::string table_name, table_range, table_format = "json";
    int table_s = 2;
    std::optional<int> table_n;
    auto* table = app.add_subcommand("table", "table of counts over a range of d");
    table->add_option("count", table_name, "tsn, lines, sextactic or cubic-conjectural")
        ->required()
        ->check(CLI::IsMember({"tsn", "lines", "sextactic", "cubic-conjectural"}));
    table->add_option("--s", table_s, "ambient dimension (tsn, lines)");
    table->add_option("--n", table_n, "curve degree");
    table->add_option("--d", table_range, "inclusive range a..b")->required();
    table->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));

    int ip_s = 0, ip_n = 0;
    std::vector<int> ip_samples, ip_checks;
    auto* interpolate = app.add_subcommand("interpolate", "recover T_{s,n}(d) as a polynomial in d");
    interpolate->add_option("--s", ip_s)->required();
    interpolate->add_option("--n", ip_n)->required();
    interpolate->add_option("--samples", ip_samples, "s sample degrees (default: smallest admissible)")->delimiter(',');
    interpolate->add_option("--check", ip_checks, "extra degrees to verify (default: next two)")->delimiter(',');

    std::vector<std::string> only;
    auto* verify = app.add_subcommand("verify", "run the regression suite");
    verify->add_option("--only", only, "comma-separated check ids")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::optional<std::filesystem::path> cache_path;
    if (!cache_flag.empty())
        cache_path = cache_flag;
    else if (const char* env = std::getenv("RELGW_CACHE"); env && *env)
        cache_path = env;

    try {
        RelativeInvariantEngine engine;

        if (*verify) {
            verify::VerifyOptions options{only, cache_path};
            return verify::run_verify(options, out);
        }

        CacheSession cache(engine, cache_path);

        if (*inv) {
            require_positive("s", key.s);
            require_positive("d", key.d);
            require_positive("n", key.n);
            require_non_negative("m", key.m);
            require_non_negative("k", key.k);
            require_non_negative("j", key.j);
            Rational value = engine.relative_invariant(key);
            if (inv_format == "text") {
                out << value << '\n';
            } else {
                nlohmann::ordered_json j{{"s", key.s}, {"d", key.d}, {"m", key.m}, {"n", key.n},
                                         {"k", key.k}, {"j", key.j}, {"value", value.to_string()}};
                out << j.dump() << '\n';
            }
        } else if (*tsn) {
            require_positive("s", tsn_s);
            require_positive("n", tsn_n);
            require_positive("d", tsn_d);
            nlohmann::ordered_json j{{"s", tsn_s}, {"n", tsn_n}, {"d", tsn_d},
                                     {"value", engine.virtual_count_T(tsn_s, tsn_n, tsn_d).to_string()}};
            out << j.dump() << '\n';
        } else if (*table) {
            auto ds = expand(parse_range(table_range));
            require_positive("s", table_s);
            std::function<CountReport(int)> row;
            if (table_name == "tsn") {
                if (!table_n)
                    throw UsageError("table tsn requires --n");
                require_positive("n", *table_n);
                const int s = table_s, n = *table_n;
                row = [&engine, s, n](int d) { return tsn_report(engine, s, n, d); };
            } else {
                const int implied_n = table_name == "lines" ? 1 : table_name == "sextactic" ? 2 : 3;
                if (table_n && *table_n >= 4)
                    throw UsageError("no enumerative count is available for n >= 4; use 'table tsn' for virtual numbers");
                if (table_n && *table_n != implied_n)
                    throw UsageError("count '" + table_name + "' has curve degree " + std::to_string(implied_n));
                if (table_name != "lines" && table_s != 2)
                    throw UsageError("count '" + table_name + "' is only defined for plane curves (s = 2)");
                const int min_d = table_name == "lines" ? std::max(3, 2 * table_s - 1) : 3;
                if (ds.front() < min_d)
                    throw UsageError("count '" + table_name + "' requires d >= " + std::to_string(min_d));
                const int s = table_s;
                if (table_name == "lines")
                    row = [&engine, s](int d) { return lines_report(engine, s, d); };
                else if (table_name == "sextactic")
                    row = [&engine](int d) { return sextactic_report(engine, d); };
                else
                    row = [&engine](int d) { return cubic_report(engine, d); };
            }
            std::vector<std::future<CountReport>> jobs;
            for (int d : ds)
                jobs.push_back(std::async(std::launch::async, row, d));
            std::vector<CountReport> rows;
            for (auto& job : jobs)
                rows.push_back(job.get());
            out << (table_format == "csv" ? reports_to_csv(rows) : reports_to_json(rows) + "\n");
        } else if (*interpolate) {
            require_positive("s", ip_s);
            require_positive("n", ip_n);
            const int lo = min_admissible_degree(ip_s);
            if (ip_samples.empty())
                for (int i = 0; i < ip_s; ++i)
                    ip_samples.push_back(lo + i);
            if (ip_checks.empty()) {
                int next = *std::max_element(ip_samples.begin(), ip_samples.end()) + 1;
                ip_checks = {next, next + 1};
            }
            if (static_cast<int>(ip_samples.size()) != ip_s)
                throw UsageError("--samples needs exactly s = " + std::to_string(ip_s) + " values");
            for (int d : ip_samples)
                if (d < lo)
                    throw UsageError("sample d=" + std::to_string(d) + " is below 2s-1 = " + std::to_string(lo));
            RationalPolynomial p;
            try {
                p = fit_and_verify(engine, ip_s, ip_n, ip_samples, ip_checks);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            nlohmann::ordered_json j{{"s", ip_s},
                                     {"n", ip_n},
                                     {"samples", ip_samples},
                                     {"checks", ip_checks},
                                     {"coefficients", nlohmann::ordered_json::parse(p.to_json())},
                                     {"polynomial", p.to_string()}};
            out << j.dump() << '\n';
        }

        cache.commit();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace relgw::cli
