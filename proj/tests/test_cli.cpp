#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = degseq::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string normalize_version(std::string text) {
    return std::regex_replace(text, std::regex("\"version\": \"[^\"]*\""),
                              "\"version\": \"X\"");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_golden(const std::string& name, const std::string& actual) {
    std::string expected = read_file(std::string(GOLDEN_DIR) + "/" + name);
    CHECK(normalize_version(actual) == normalize_version(expected));
}

} // namespace

TEST_CASE("graphic subcommand") {
    CliResult r = run_cli({"graphic", "--seq", "3,3,1,1"});
    CHECK(r.exit_code == 0);
    check_golden("graphic_3311.json", r.out);

    r = run_cli({"graphic", "--seq", "1,1,1"});
    CHECK(r.exit_code == 1); // OddSum is a domain error
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["error"]["tag"] == "OddSum");
}

TEST_CASE("usage errors exit with 2") {
    CliResult r = run_cli({"graphic"});
    CHECK(r.exit_code == 2);
    CHECK_FALSE(r.err.empty());

    r = run_cli({"nonsense"});
    CHECK(r.exit_code == 2);

    r = run_cli({"boundary", "--seq", "1,1,1,1", "--convention", "xx"});
    CHECK(r.exit_code == 2);

    r = run_cli({"certify", "--graph", "/nonexistent.json", "--p", "0", "--q", "1",
                 "--region", "5,4,3,0"});
    CHECK(r.exit_code == 2);
}

TEST_CASE("leg and classify subcommands") {
    CliResult r = run_cli({"leg", "--n", "4", "--sigma", "8", "--c1", "3", "--c2", "1"});
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["leg"] == nlohmann::json::array({3, 3, 1, 1}));

    r = run_cli({"classify", "--n", "4", "--sigma", "8", "--c1", "3", "--c2", "1"});
    CHECK(r.exit_code == 0);
    check_golden("classify_4831.json", r.out);

    r = run_cli({"classify", "--n", "8", "--sigma", "20", "--c1", "3", "--c2", "2",
                 "--epsilon", "0.5"});
    CHECK(r.exit_code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["gs_plus"] == true);
}

TEST_CASE("count and boundary subcommands") {
    CliResult r = run_cli({"count", "--seq", "2,2,2,2"});
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == "3");

    r = run_cli({"boundary", "--seq", "1,1,1,1"});
    CHECK(r.exit_code == 0);
    check_golden("boundary_1111.json", r.out);

    r = run_cli({"boundary", "--seq", "3,3,1,1"});
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.out)["error"]["tag"] == "NotGraphic");
}

TEST_CASE("certify subcommand with a graph file") {
    CliResult r = run_cli({"certify", "--graph", std::string(GOLDEN_DIR) + "/hostile5_graph.json",
                           "--p", "0", "--q", "1", "--region", "5,4,3,0"});
    CHECK(r.exit_code == 0);
    check_golden("certify_hostile5.json", r.out);
}

TEST_CASE("window subcommand") {
    CliResult r =
        run_cli({"window", "--n", "100", "--c1", "60", "--c2", "1", "--r", "4", "--beta", "0.9"});
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["sigma_min"] == 214);
    CHECK(j["sigma_max"] == 3638);
    CHECK(j["eq8_holds"] == true);
    CHECK(j["epsilon_bound_holds"] == true);

    // empty window reports and exits 1
    r = run_cli({"window", "--n", "10", "--c1", "4", "--c2", "2", "--r", "2"});
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.out)["empty"] == true);

    // CSV sweep
    std::string csv_path = "window_sweep_test.csv";
    r = run_cli({"window", "--n", "40,60", "--c1", "38", "--c2", "1,2", "--r", "2,4", "--beta",
                 "0.5", "--out", csv_path});
    CHECK(r.exit_code == 0);
    std::string csv = read_file(csv_path);
    CHECK(csv.find("n,c1,c2,r,beta,x_min,x_max,sigma_min,sigma_max,epsilon_num,epsilon_den,"
                   "eq8_holds") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9); // header + 8 combos
    std::remove(csv_path.c_str());
}

TEST_CASE("adversarial subcommand") {
    CliResult r = run_cli({"adversarial", "--n", "6", "--sigma", "18", "--c1", "5", "--c2", "1",
                           "--r", "4"});
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["sequence"] == nlohmann::json::array({5, 2, 3, 3, 4, 1}));
    CHECK(j["x"] == 1);
    CHECK(j["e"] == 1);

    r = run_cli({"adversarial", "--n", "100", "--sigma", "4000", "--c1", "60", "--c2", "1",
                 "--r", "4"});
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.out)["error"]["tag"] == "SigmaOutsideWindow");
}

TEST_CASE("mcmc subcommand is deterministic and logs samples") {
    std::vector<std::string> args = {"mcmc", "--seq",  "1,1,1,1", "--steps", "2000",
                                     "--seed", "1",    "--burnin", "100"};
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out); // byte-identical
    check_golden("mcmc_1111.json", a.out);

    std::string csv_path = "mcmc_test.csv";
    CliResult c = run_cli({"mcmc", "--seq", "1,1,1,1", "--steps", "100", "--seed", "2", "--thin",
                           "10", "--csv", csv_path});
    CHECK(c.exit_code == 0);
    std::string csv = read_file(csv_path);
    CHECK(csv.find("sample_index,state_key") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
    std::remove(csv_path.c_str());

    CliResult d = run_cli({"mcmc", "--seq", "1,1,1,1", "--steps", "10"});
    CHECK(d.exit_code == 2); // --seed is required
}

TEST_CASE("scan subcommand emits one row per even sigma") {
    std::string csv_path = "scan_test.csv";
    CliResult r = run_cli({"scan", "--n", "6", "--c1", "4", "--c2", "1", "--r", "4", "--out",
                           csv_path});
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"] == 10); // even sigmas in [6, 24]
    std::string csv = read_file(csv_path);
    check_golden("scan_6_4_1.csv", csv);
    std::remove(csv_path.c_str());
}
