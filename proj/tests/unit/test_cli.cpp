#include "doctest.h"

#include "relgw/cli.hpp"
#include "relgw/polynomial.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "relgw");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = relgw::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("relgw_cli_" + name);
    std::filesystem::remove(p);
    return p;
}

} // namespace

TEST_CASE("invariant subcommand")
{
    auto r = run_cli({"invariant", "--s", "2", "--d", "4", "--m", "6", "--n", "2", "--k", "0", "--j", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"s\":2,\"d\":4,\"m\":6,\"n\":2,\"k\":0,\"j\":0,\"value\":\"102\"}\n");

    r = run_cli({"invariant", "--s", "2", "--d", "3", "--m", "0", "--n", "1", "--k", "5", "--j", "0"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["value"] == "0");

    r = run_cli({"invariant", "--s", "3", "--d", "5", "--m", "5", "--n", "1", "--k", "0", "--j", "0"});
    CHECK(nlohmann::json::parse(r.out)["value"] == "575");

    r = run_cli({"invariant", "--s", "2", "--d", "3", "--m", "6", "--n", "2", "--k", "0", "--j", "0", "--format", "text"});
    CHECK(r.out == "135/4\n");
}

TEST_CASE("usage errors exit with status 2")
{
    CHECK(run_cli({"invariant", "--s", "2"}).code == 2);
    CHECK(run_cli({"invariant", "--s", "0", "--d", "3", "--m", "0", "--n", "1", "--k", "0", "--j", "0"}).code == 2);
    CHECK(run_cli({"invariant", "--s", "2", "--d", "3", "--m", "-1", "--n", "1", "--k", "0", "--j", "0"}).code == 2);
    CHECK(run_cli({"invariant", "--s", "x", "--d", "3", "--m", "0", "--n", "1", "--k", "0", "--j", "0"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"table", "sextactic", "--d", "5..3"}).code == 2);
    CHECK(run_cli({"table", "sextactic", "--d", "3-5"}).code == 2);
    CHECK(run_cli({"table", "sextactic", "--d", "2..4"}).code == 2);
    CHECK(run_cli({"table", "sextactic", "--d", "3..4", "--n", "4"}).code == 2);
    CHECK(run_cli({"table", "cubic-conjectural", "--d", "3..4", "--n", "2"}).code == 2);
    CHECK(run_cli({"table", "tsn", "--d", "3..4"}).code == 2);
    CHECK(run_cli({"table", "sextactic", "--d", "3..4", "--format", "xml"}).code == 2);
    CHECK(run_cli({"interpolate", "--s", "2", "--n", "2", "--samples", "2,3"}).code == 2);
    CHECK(run_cli({"verify", "--only", "nonsense"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("tsn subcommand")
{
    auto r = run_cli({"tsn", "--s", "2", "--n", "3", "--d", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"s\":2,\"n\":3,\"d\":4,\"value\":\"2384/3\"}\n");
}

TEST_CASE("table subcommand")
{
    auto r = run_cli({"table", "sextactic", "--d", "3..6", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> last;
    std::getline(lines, line);
    CHECK(line == "name,d,total_virtual,correction_total,enumerative_count");
    while (std::getline(lines, line))
        last.push_back(line.substr(line.rfind(',') + 1));
    CHECK(last == std::vector<std::string>{"27", "84", "165", "270"});

    r = run_cli({"table", "tsn", "--s", "2", "--n", "2", "--d", "3..4"});
    CHECK(r.code == 0);
    auto rows = nlohmann::json::parse(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["total_virtual"] == "135/4");
    CHECK(rows[1]["total_virtual"] == "102");
    CHECK(rows[0]["kind"] == "virtual");

    r = run_cli({"table", "lines", "--s", "2", "--d", "3..3"});
    CHECK(nlohmann::json::parse(r.out)[0]["enumerative_count"] == "9");

    r = run_cli({"table", "cubic-conjectural", "--d", "3..3", "--format", "csv"});
    CHECK(r.out.find("cubic,3,244,10,234") != std::string::npos);
}

TEST_CASE("interpolate subcommand")
{
    auto r = run_cli({"interpolate", "--s", "2", "--n", "2"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["coefficients"] == nlohmann::json::array({"0", "-63/2", "57/4"}));
    CHECK(j["samples"] == nlohmann::json::array({3, 4}));
    CHECK(j["checks"] == nlohmann::json::array({5, 6}));
    CHECK(relgw::RationalPolynomial::from_json(j["coefficients"].dump()).evaluate(relgw::Rational(4))
          == relgw::Rational(102));

    r = run_cli({"interpolate", "--s", "3", "--n", "2", "--samples", "5,6,7", "--check", "8"});
    CHECK(nlohmann::json::parse(r.out)["polynomial"] == "20331/4*d^3 - 30294*d^2 + 39852*d");
}

TEST_CASE("verify subcommand")
{
    auto r = run_cli({"verify", "--only", "stirling"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  [1] stirling") != std::string::npos);
    CHECK(r.out.find("[2]") == std::string::npos);
    CHECK(r.out.find("1 passed, 0 failed") != std::string::npos);
}

TEST_CASE("corrupted cache makes verify fail and names the file")
{
    auto path = temp_file("corrupt.cache");
    std::ofstream(path) << "not a cache\n";
    auto r = run_cli({"verify", "--only", "stirling,hand-values", "--cache", path.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find(path.string()) != std::string::npos);
    CHECK(r.out.find("first failing check: cache") != std::string::npos);

    r = run_cli({"tsn", "--s", "2", "--n", "2", "--d", "3", "--cache", path.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find(path.string()) != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("output is identical with a cold and a warm cache")
{
    auto path = temp_file("warm.cache");
    std::vector<std::string> args{"table", "cubic-conjectural", "--d", "3..5", "--cache", path.string()};
    auto cold = run_cli(args);
    REQUIRE(cold.code == 0);
    REQUIRE(std::filesystem::exists(path));
    auto warm = run_cli(args);
    CHECK(warm.code == 0);
    CHECK(warm.out == cold.out);
    auto uncached = run_cli({"table", "cubic-conjectural", "--d", "3..5"});
    CHECK(uncached.out == cold.out);

    auto v = run_cli({"verify", "--only", "hand-values", "--cache", path.string()});
    CHECK(v.code == 0);
    CHECK(v.out.find("PASS  [cache]") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("RELGW_CACHE supplies the default cache and --cache overrides it")
{
    auto env_path = temp_file("env.cache");
    auto flag_path = temp_file("flag.cache");
    ::setenv("RELGW_CACHE", env_path.string().c_str(), 1);
    auto r = run_cli({"tsn", "--s", "2", "--n", "2", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(env_path));
    r = run_cli({"tsn", "--s", "2", "--n", "2", "--d", "4", "--cache", flag_path.string()});
    CHECK(std::filesystem::exists(flag_path));
    ::unsetenv("RELGW_CACHE");
    std::filesystem::remove(env_path);
    std::filesystem::remove(flag_path);
}
