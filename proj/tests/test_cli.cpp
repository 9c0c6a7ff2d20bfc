#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

std::string mkls_bin() {
    const char* p = std::getenv("MKLS_BIN");
    return p && *p ? p : "./mkls";
}

std::string fixture_dir() {
    const char* p = std::getenv("MKLS_FIXTURES");
    return p && *p ? p : "fixtures";
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_file = "cli_test_output.tmp";
    const std::string cmd = mkls_bin() + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream f(out_file);
    std::stringstream ss;
    ss << f.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

json fixture(const std::string& name) {
    std::ifstream f(fixture_dir() + "/" + name);
    REQUIRE(f.good());
    return json::parse(f);
}

}  // namespace

TEST_CASE("compute matches the frozen oracle fixtures") {
    for (const std::string name :
         {"uniform_2_3.json", "sparse_paving_4_2.json", "qniform_2_3_2.json",
          "paving_3_6.json"}) {
        json fx = fixture(name);
        RunResult r = run("compute --json --matroid '" + fx["matroid"].dump() + "'");
        REQUIRE(r.exit_code == 0);
        json got = json::parse(r.out);
        for (const char* field : {"char_poly", "P", "Q", "Z", "Y"})
            CHECK(got.at(field) == fx.at(field));
    }
}

TEST_CASE("closed forms agree with the frozen oracle fixtures") {
    json fx = fixture("uniform_2_3.json");
    RunResult r = run("formula ordinary_Y_uniform -k 2 -n 3 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("value") == fx.at("Y"));

    json qfx = fixture("qniform_2_3_2.json");
    RunResult rq = run("formula ordinary_Y_qniform -k 2 -n 3 -q 2 --json");
    REQUIRE(rq.exit_code == 0);
    CHECK(json::parse(rq.out).at("value") == qfx.at("Y"));
}

TEST_CASE("malformed or invalid inputs exit with code 2") {
    CHECK(run("compute --matroid '{\"backend\":\"uniform\",\"k\":2'").exit_code == 2);
    CHECK(run("compute --matroid '{\"backend\":\"nope\",\"k\":1,\"n\":2}'").exit_code == 2);
    CHECK(run("compute --matroid no_such_file.json").exit_code == 2);
    CHECK(run("formula no_such_formula").exit_code == 2);
    CHECK(run("verify no_such_theorem").exit_code == 2);
    CHECK(run("relax --matroid '{\"backend\":\"uniform\",\"k\":2,\"n\":4}' "
              "--hyperplane 0,1").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
}

TEST_CASE("large ground sets require an explicit override") {
    const std::string spec = "'{\"backend\":\"uniform\",\"k\":1,\"n\":17}'";
    CHECK(run("compute --matroid " + spec).exit_code == 2);
    RunResult r = run("compute --matroid " + spec + " --unsafe-large --json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("Y") == json::parse("[1,1]"));
}

TEST_CASE("verify passes at reduced range and exits zero") {
    RunResult r = run("verify thm1.1 prop2.2 --range n=5 --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("reports").size() == 2);
}

TEST_CASE("relax reports a matching delta") {
    const std::string spec =
        "'{\"backend\":\"sparse_paving\",\"k\":3,\"n\":6,"
        "\"circuit_hyperplanes\":[[0,1,2]]}'";
    RunResult r = run("relax --matroid " + spec + " --all-stressed --json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("match") == true);
    CHECK(j.at("diff") == j.at("predicted_diff"));
}

TEST_CASE("exploration is reproducible by seed") {
    const std::string args = "explore --seed 7 --count 25 --range n=4..7 --json";
    RunResult a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    CHECK(j.at("count") == 25);
}
