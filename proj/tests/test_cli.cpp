#include "doctest.h"

#include "modcohom/certificate.hpp"
#include "modcohom/cli.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace modcohom;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "modcohom");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

// Rebuilds an argument list from a report's params block.
std::vector<std::string> args_from_params(const json& report) {
    std::vector<std::string> args = {report.at("command").get<std::string>()};
    for (const auto& [key, value] : report.at("params").items()) {
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back("--" + key);
            continue;
        }
        args.push_back("--" + key);
        args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
    args.insert(args.end(), {"--format", "json"});
    return args;
}

}  // namespace

TEST_CASE("report schema") {
    const Run r = run({"h1", "--group", "psl2", "--n", "10", "--format", "json"});
    REQUIRE(r.code == 0);
    const json d = r.doc();
    for (const char* key : {"command", "params", "results", "checks", "version", "timing"}) CHECK(d.contains(key));
    CHECK(d["command"] == "h1");
    CHECK(d["results"]["free_rank"] == 3);
    CHECK(d["results"]["matches_formula"] == true);
    for (const json& c : d["checks"]) {
        for (const char* key : {"name", "expected", "actual", "pass"}) CHECK(c.contains(key));
    }
}

TEST_CASE("exit codes") {
    CHECK(run({"h1", "--group", "gl2", "--n", "10"}).code == 0);
    CHECK(run({"h1", "--group", "psl2", "--n", "3"}).code == 2);       // projective needs even n
    CHECK(run({"h1", "--group", "nonsense", "--n", "2"}).code == 2);
    CHECK(run({"h1", "--n", "2"}).code == 2);                          // missing --group
    CHECK(run({}).code == 2);
    CHECK(run({"classify", "--matrix", "2,0;0,1"}).code == 2);        // det 2
    CHECK(run({"classify", "--matrix", "garbage"}).code == 2);
    CHECK(run({"pell", "--d", "16"}).code == 2);                      // square
    CHECK(run({"witness", "--kind", "free-lift:13"}).code == 2);      // p not 11 mod 12
    CHECK(run({"witness", "--kind", "free-lift:11", "--n", "2"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"h1", "--group", "psl2", "--n", "4", "--format", "csv"}).code == 2);
    CHECK(run({"verify-certificate", "--file", "/nonexistent/cert.json"}).code == 2);
    CHECK(run({"--version"}).code == 0);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check failures exit with 1") {
    // A certificate whose cocycle was altered no longer verifies.
    const auto path = temp_file("modcohom_test_cert.json");
    REQUIRE(run({"witness", "--kind", "ba:2,1", "--cert", path.string()}).code == 0);
    CHECK(run({"verify-certificate", "--file", path.string()}).code == 0);
    json cert;
    std::ifstream(path) >> cert;
    cert["cocycle"][1][0] = "1";
    std::ofstream(path) << cert.dump();
    const Run bad = run({"verify-certificate", "--file", path.string(), "--format", "json"});
    CHECK(bad.code == 1);
    CHECK(bad.doc()["checks"][0]["pass"] == false);
    std::filesystem::remove(path);
}

TEST_CASE("reports re-run from their own params") {
    const std::vector<std::vector<std::string>> cases = {
        {"h1", "--group", "gamma0bar:11", "--n", "2"},
        {"pell", "--d", "13", "--neg", "--four", "--solve", "-4"},
        {"classify", "--matrix", "2,1;1,1"},
        {"witness", "--kind", "ba:4,3"},
        {"verify", "--suite", "pell", "--d-max", "12"},
    };
    for (std::vector<std::string> args : cases) {
        args.insert(args.end(), {"--format", "json"});
        const Run first = run(args);
        REQUIRE(first.code == 0);
        const Run second = run(args_from_params(first.doc()));
        REQUIRE(second.code == 0);
        CHECK(first.doc()["results"] == second.doc()["results"]);
        CHECK(first.doc()["checks"] == second.doc()["checks"]);
    }
}

TEST_CASE("results do not depend on the number of jobs") {
    const Run one = run({"verify", "--suite", "formulas", "--n-even", "2..16", "--n-odd", "1..9", "--jobs", "1", "--format", "json"});
    const Run many = run({"verify", "--suite", "formulas", "--n-even", "2..16", "--n-odd", "1..9", "--jobs", "4", "--format", "json"});
    REQUIRE(one.code == 0);
    REQUIRE(many.code == 0);
    CHECK(one.doc()["results"] == many.doc()["results"]);
    CHECK(one.doc()["checks"] == many.doc()["checks"]);
    // The environment variable sets the default.
    ::setenv("MODCOHOM_JOBS", "3", 1);
    const Run env = run({"verify", "--suite", "formulas", "--n-even", "2..16", "--n-odd", "1..9", "--format", "json"});
    ::unsetenv("MODCOHOM_JOBS");
    CHECK(env.doc()["results"] == one.doc()["results"]);
}

TEST_CASE("csv output has one row per case") {
    const Run r = run({"verify", "--suite", "identity", "--n-max", "20", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "case,pass,checks,failed,failed_checks");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find(",true,") != std::string::npos);
    }
    CHECK(rows == 11);  // n = 0, 2, ..., 20
}

TEST_CASE("--out writes the report to a file") {
    const auto path = temp_file("modcohom_test_report.json");
    const Run r = run({"classify", "--matrix", "1,3;0,1", "--format", "json", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    json d;
    std::ifstream(path) >> d;
    CHECK(d["results"]["generator"] == "1,1;0,1");
    std::filesystem::remove(path);
}

TEST_CASE("witness embeds a certificate that verifies independently") {
    const Run r = run({"witness", "--kind", "free-lift:23", "--n", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const Certificate c = certificate_from_json(r.doc()["results"]["certificate"]);
    CHECK(c.evidence.size() == 2);
    CHECK(verify_certificate(c).ok);
}
