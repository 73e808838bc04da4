#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "sinai/cli.hpp"

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = sinai::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("count phi by recurrence") {
    const auto r = run_cli({"count", "phi", "--max-n", "3", "--route", "recurrence"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,value\n0,1\n1,1\n2,3\n3,16\n");
}

TEST_CASE("routes print identical tables") {
    const auto brute = run_cli({"count", "phi", "--max-n", "6", "--route", "brute"});
    const auto dp = run_cli({"count", "phi", "--max-n", "6", "--route", "dp"});
    const auto rec = run_cli({"count", "phi", "--max-n", "6"});
    CHECK(brute.out == dp.out);
    CHECK(dp.out == rec.out);
}

TEST_CASE("xi and lambda_vs") {
    CHECK(run_cli({"xi", "--n", "2"}).out == "5\n");
    CHECK(run_cli({"lambda", "--k", "2", "--modulus", "2", "--residue", "0"}).out == "2\n");
    CHECK(run_cli({"lambda", "--k", "2", "--modulus", "2"}).code == 2);
    CHECK(run_cli({"lambda", "--k", "2", "--modulus", "2", "--residue", "0", "--terms", "5"}).code == 2);
    const auto table = run_cli({"lambda", "--terms", "100", "--digits", "20"});
    CHECK(table.code == 0);
    CHECK(table.out.rfind("quantity,lower,upper,note\nlambda,", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"count", "foo"}).code == 2);
    CHECK(run_cli({"count", "phi", "--bogus"}).code == 2);
    CHECK(run_cli({"count", "phi", "--max-n", "-1"}).code == 2);
    CHECK(run_cli({"count", "phi", "--route", "dp", "--max-n", "99"}).code == 3);
    CHECK(run_cli({"count", "phi", "--route", "brute", "--max-n", "12"}).code == 3);
    CHECK(run_cli({"simulate", "bridge", "--n", "100000"}).code == 3);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("help lists the defaults") {
    const auto r = run_cli({"simulate", "--help"});
    CHECK(r.out.find("100000") != std::string::npos);
    CHECK(r.out.find("20240601") != std::string::npos);
    const auto l = run_cli({"lambda", "--help"});
    CHECK(l.out.find("10000") != std::string::npos);
    CHECK(l.out.find("50") != std::string::npos);
    CHECK(run_cli({"count", "--help"}).out.find("20") != std::string::npos);
}

TEST_CASE("verify passes") {
    const auto r = run_cli({"verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fail") == std::string::npos);
    CHECK(r.out.find("phi_three_routes: pass") != std::string::npos);
}

TEST_CASE("json parses and mirrors csv") {
    const auto json = run_cli({"count", "phi", "--max-n", "5", "--format", "json"});
    REQUIRE(json.code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["format"] == "sinai-table");
    CHECK(doc["version"] == 1);
    CHECK(doc["table"] == "phi");
    CHECK(doc["rows"]["5"]["value"] == "1070");
    CHECK(doc["rows"].size() == 6);
    CHECK(nlohmann::json::parse(doc.dump()) == doc);

    const auto table = run_cli({"table", "pn", "--max-n", "4", "--terms", "200", "--format", "json"});
    const auto t = nlohmann::json::parse(table.out);
    CHECK(t["rows"]["2"]["value"] == "3/8");
}

TEST_CASE("bijection demo matches the golden file") {
    const auto r = run_cli({"bijection", "--demo"});
    CHECK(r.code == 0);
    CHECK(r.out == read_file(std::string(SINAI_GOLDEN_DIR) + "/bijection_demo.csv"));
}

TEST_CASE("simulation output is stable and seed driven") {
    const std::vector<std::string> args{"simulate", "persistence", "--n", "100", "--trials", "5000", "--seed", "11"};
    const auto a = run_cli(args);
    auto threaded = args;
    threaded.insert(threaded.begin(), {"--threads", "3"});
    const auto b = run_cli(threaded);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    setenv("SINAI_SEED", "11", 1);
    const auto c = run_cli({"simulate", "persistence", "--n", "100", "--trials", "5000"});
    unsetenv("SINAI_SEED");
    CHECK(c.out == a.out);
    const auto d = run_cli({"simulate", "persistence", "--n", "100", "--trials", "5000", "--seed", "12"});
    CHECK(d.out != a.out);
}

TEST_CASE("output flag writes a file") {
    const std::string path = "sinai_cli_test_output.csv";
    const auto r = run_cli({"--output", path, "count", "xi", "--max-n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(read_file(path) == "n,value\n0,0\n1,1\n2,5\n3,40\n");
    std::remove(path.c_str());
}

TEST_CASE("installed binary reports exit codes") {
    const std::string exe = SINAI_CLI_PATH;
    const auto status = [&](const std::string& args) {
        const int raw = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("xi --n 2") == 0);
    CHECK(status("count nope") == 2);
    CHECK(status("count phi --route dp --max-n 999") == 3);
}
