#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulersums/cli.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using eulersums::cli::run_cli;
using nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "eulersums");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

ordered_json json_of(const Result& r) { return ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("tables") {
    const auto csv = run({"tables", "genocchi", "8", "--format", "csv"});
    CHECK(csv.code == eulersums::cli::kExitOk);
    CHECK(csv.out.rfind("8,17\n") == csv.out.size() - 5);
    CHECK(csv.out.rfind("n,value\n", 0) == 0);

    const auto bern = json_of(run({"tables", "bernoulli", "2"}));
    REQUIRE(bern.size() == 3);
    CHECK(bern[2]["value"] == "1/6");
    CHECK(bern[1]["value"] == "-1/2");
    CHECK(bern[0]["kind"] == "table_row");

    const auto c = json_of(run({"tables", "c_coeff", "2"}));
    REQUIRE(c.size() == 2);
    CHECK(c[0]["n"] == 1);
    CHECK(c[0]["value"] == "1/4");
    CHECK(c[1]["value"] == "7/48");

    const auto euler = json_of(run({"tables", "euler_zero", "3"}));
    CHECK(euler[1]["value"] == "-1/2");
    CHECK(euler[2]["value"] == "0");
    CHECK(euler[3]["value"] == "1/4");

    CHECK(run({"tables", "genocchi", "0"}).code == eulersums::cli::kExitUsage);
    CHECK(run({"tables", "catalan", "3"}).code == eulersums::cli::kExitUsage);
}

TEST_CASE("values") {
    const auto u = json_of(run({"values", "u", "2"}));
    REQUIRE(u.size() == 3);
    CHECK(u[0]["value"]["rational_part"] == "0");
    CHECK(u[0]["value"]["log2_coeff"] == "1/2");
    CHECK(u[1]["value"]["rational_part"] == "1/4");
    CHECK(u[1]["value"]["log2_coeff"] == "-1/4");
    CHECK(u[2]["value"]["rational_part"] == "-1/8");
    CHECK(u[2]["value"]["log2_coeff"] == "0");
    CHECK(u[2]["s"] == -2);

    const auto v = json_of(run({"values", "v", "1"}));
    REQUIRE(v.size() == 2);
    CHECK(v[0]["pole"]["residue"] == "1/2");
    CHECK(v[1]["pole"]["residue"] == "-1/4");
    CHECK(v[1]["pole"]["order"] == 1);

    const auto w = json_of(run({"values", "w", "0"}));
    REQUIRE(w.size() == 1);
    CHECK(w[0]["value"]["rational_part"] == "-1/2");
    CHECK(w[0]["value"]["log2_coeff"] == "1/2");
}

TEST_CASE("eval") {
    const auto r = run({"eval", "u", "2"});
    REQUIRE(r.code == eulersums::cli::kExitOk);
    const auto u = json_of(r);
    CHECK(u[0]["value"]["re"].get<double>() == doctest::Approx(0.625 * 1.2020569031595942854).epsilon(1e-11));
    CHECK(u[0]["error_bound"].get<double>() < 1e-10);
    CHECK(u[0]["config"]["tol"].get<double>() == 1e-10);

    const auto z = json_of(run({"eval", "zeta", "2,1"}));
    CHECK(z[0]["value"]["im"].get<double>() == doctest::Approx(-0.437530865919607881).epsilon(1e-12));

    const auto q = json_of(run({"--q", "7", "eval", "v", "-2"}));
    CHECK(q[0]["config"]["q"] == 7);
    CHECK(q[0]["value"]["re"].get<double>() == doctest::Approx(5.0 / 24.0).epsilon(1e-9));

    const auto g = json_of(run({"eval", "G", "0.5"}));
    CHECK(g[0]["value"]["re"].get<double>() < 0.0);
}

TEST_CASE("domain errors exit 3 with a reason") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"eval", "v", "0"}, {"eval", "w", "1"}}) {
        const auto r = run(args);
        CHECK(r.code == eulersums::cli::kExitDomain);
        const auto j = json_of(r);
        CHECK(j[0]["kind"] == "error");
        CHECK(j[0]["reason"] == "pole");
        CHECK_FALSE(r.err.empty());
    }
    const auto g = run({"eval", "G", "2"});
    CHECK(g.code == eulersums::cli::kExitDomain);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"--seed", "1", "eval", "u", "2"}).code == eulersums::cli::kExitUsage);
    CHECK(run({"eval", "u", "abc"}).code == eulersums::cli::kExitUsage);
    CHECK(run({"eval", "x", "2"}).code == eulersums::cli::kExitUsage);
    CHECK(run({"--format", "xml", "tables", "bernoulli", "2"}).code == eulersums::cli::kExitUsage);
    CHECK(run({"--tol", "-1", "eval", "u", "2"}).code == eulersums::cli::kExitUsage);
    CHECK(run({}).code == eulersums::cli::kExitUsage);
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run_cli({}, out, err) == eulersums::cli::kExitUsage);
}

TEST_CASE("json output round-trips") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"tables", "euler_zero", "6"}, {"values", "v", "3"}, {"eval", "eta", "0.5,14"}, {"verify", "theorem4"}}) {
        const auto r = run(args);
        const auto j = ordered_json::parse(r.out);
        CHECK(j.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("verify suites") {
    const auto exact = run({"verify", "exact_identities", "40"});
    CHECK(exact.code == eulersums::cli::kExitOk);
    for (const auto& rec : json_of(exact)) CHECK(rec["passed"] == true);

    CHECK(run({"--tol", "1e-8", "verify", "continuation", "6"}).code == eulersums::cli::kExitOk);

    const auto t4 = run({"--tol", "1e-8", "verify", "theorem4"});
    CHECK(t4.code == eulersums::cli::kExitOk);
    const auto j = json_of(t4);
    CHECK(j.size() == 3);

    // an impossible tolerance makes the check fail rather than pass silently
    CHECK(run({"--tol", "1e-30", "verify", "theorem4"}).code == eulersums::cli::kExitVerifyFailed);
}

TEST_CASE("bench") {
    const auto r = run({"bench", "u", "1.5", "--methods", "naive,boole", "--digits", "6"});
    REQUIRE(r.code == eulersums::cli::kExitOk);
    const auto rows = json_of(r);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["method"] == "naive");
    CHECK(rows[1]["method"] == "boole");
    CHECK(rows[1]["terms"].get<std::size_t>() < rows[0]["terms"].get<std::size_t>());

    const auto csv = run({"--format", "csv", "bench", "v", "2", "--methods", "boole", "--digits", "6"});
    CHECK(csv.code == eulersums::cli::kExitOk);
    CHECK(csv.out.find("boole") != std::string::npos);
    CHECK(run({"bench", "u", "1.5", "--methods", "fast"}).code == eulersums::cli::kExitUsage);
}
