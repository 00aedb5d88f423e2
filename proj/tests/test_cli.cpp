#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end coverage of the CLI surface: subcommands, file formats, exit
// codes, and report determinism. Each test shells out to the built binary.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace {

std::string tmp_path(const std::string& name) {
    return std::string(PROMO_TEST_TMPDIR) + "/" + name;
}

int run_cli(const std::string& args, const std::string& stdout_file = "") {
    std::string cmd = std::string(PROMO_CLI_PATH) + " " + args;
    if (!stdout_file.empty()) cmd += " > " + stdout_file + " 2>/dev/null";
    else cmd += " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("generate writes canonical poset files deterministically") {
    const std::string out1 = tmp_path("cli_chain4_a.json");
    const std::string out2 = tmp_path("cli_chain4_b.json");
    CHECK(run_cli("generate chain --n 4 --out " + out1) == 0);
    CHECK(run_cli("generate chain --n 4 --out " + out2) == 0);
    CHECK(slurp(out1) == slurp(out2));
    auto doc = nlohmann::json::parse(slurp(out1));
    CHECK(doc["n"] == 4);
    CHECK(doc["covers"].size() == 3);

    const std::string rnd1 = tmp_path("cli_rand_a.json");
    const std::string rnd2 = tmp_path("cli_rand_b.json");
    CHECK(run_cli("generate random --n 5 --density 0.4 --seed 7 --out " + rnd1) == 0);
    CHECK(run_cli("generate random --n 5 --density 0.4 --seed 7 --out " + rnd2) == 0);
    CHECK(slurp(rnd1) == slurp(rnd2));

    CHECK(run_cli("generate product-of-chains --dims 2,2 --out " + tmp_path("cli_grid.json")) == 0);
    auto grid = nlohmann::json::parse(slurp(tmp_path("cli_grid.json")));
    CHECK(grid["covers"] == nlohmann::json::parse("[[0,1],[0,2],[1,3],[2,3]]"));
}

TEST_CASE("promote, sort-time, profile") {
    const std::string chain3 = tmp_path("cli_chain3.json");
    REQUIRE(run_cli("generate chain --n 3 --out " + chain3) == 0);

    const std::string out = tmp_path("cli_promote.txt");
    CHECK(run_cli("promote " + chain3 + " 3,1,2", out) == 0);
    CHECK(slurp(out) == "[2,1,3]\n");
    CHECK(run_cli("promote " + chain3 + " 3,1,2 --steps 2", out) == 0);
    CHECK(slurp(out) == "[1,2,3]\n");

    CHECK(run_cli("sort-time " + chain3 + " 3,1,2", out) == 0);
    CHECK(slurp(out) == "2\n");
    CHECK(run_cli("sort-time " + chain3 + " [1,2,3]", out) == 0);
    CHECK(slurp(out) == "0\n");

    const std::string prof = tmp_path("cli_profile.json");
    CHECK(run_cli("profile " + chain3 + " --format structured --out " + prof) == 0);
    auto doc = nlohmann::json::parse(slurp(prof));
    CHECK(doc["a"] == nlohmann::json::parse(R"(["1","4","6"])"));
    CHECK(doc["a_hat"] == nlohmann::json::parse(R"(["1","3","2"])"));
    CHECK(doc["mean_sorting_time"]["exact"] == "7/6");
}

TEST_CASE("count subcommands") {
    const std::string chain3 = tmp_path("cli_chain3b.json");
    REQUIRE(run_cli("generate chain --n 3 --out " + chain3) == 0);
    const std::string out = tmp_path("cli_count.txt");

    CHECK(run_cli("count tangled " + chain3, out) == 0);
    CHECK(slurp(out) == "2\n");
    CHECK(run_cli("count linext " + chain3, out) == 0);
    CHECK(slurp(out) == "1\n");
    CHECK(run_cli("count k-untangled " + chain3 + " --k 1", out) == 0);
    CHECK(slurp(out) == "5\n");
    CHECK(run_cli("count sortable " + chain3, out) == 0);
    CHECK(slurp(out).find("agree") != std::string::npos);
}

TEST_CASE("formula subcommands") {
    const std::string out = tmp_path("cli_formula.txt");
    CHECK(run_cli("formula unique-min --n 4 --r 1", out) == 0);
    CHECK(slurp(out) == "6\n");
    CHECK(run_cli("formula star --root-fiber 1 --leaf-fibers 2,1", out) == 0);
    CHECK(slurp(out) == "3\n");

    const std::string spec = tmp_path("cli_tree.json");
    std::ofstream(spec) << R"({"trees":[{"parents":[-1,0,0,2,2],"fibers":[1,2,1,1,1]}]})";
    CHECK(run_cli("formula tree " + spec, out) == 0);
    CHECK(slurp(out) == "30\n");
    CHECK(run_cli("formula forest " + spec, out) == 0);
    CHECK(slurp(out) == "30\n");

    const std::string forest = tmp_path("cli_forest.json");
    std::ofstream(forest) << R"({"trees":[{"parents":[-1],"fibers":[2]},{"parents":[-1],"fibers":[2]}]})";
    CHECK(run_cli("formula forest " + forest, out) == 0);
    CHECK(slurp(out) == "4\n");

    // inflated-forest generation realizes the spec
    const std::string realized = tmp_path("cli_realized.json");
    CHECK(run_cli("generate inflated-forest --spec " + spec + " --out " + realized) == 0);
    CHECK(nlohmann::json::parse(slurp(realized))["n"] == 6);
}

TEST_CASE("verify and scan-conjectures") {
    const std::string out = tmp_path("cli_verify.json");
    CHECK(run_cli("verify --cap 4 --random-count 5 --format structured --out " + out) == 0);
    auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["failures"] == 0);
    CHECK(doc["checks"].size() == 12);

    const std::string scan1 = tmp_path("cli_scan1.json");
    const std::string scan2 = tmp_path("cli_scan2.json");
    CHECK(run_cli("scan-conjectures --cap 4 --count 5 --no-catalog --seeds 3 --format structured --out " +
                  scan1) == 0);
    CHECK(run_cli("scan-conjectures --cap 4 --count 5 --no-catalog --seeds 3 --format structured --out " +
                  scan2) == 0);
    auto a = nlohmann::json::parse(slurp(scan1));
    auto b = nlohmann::json::parse(slurp(scan2));
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a.dump() == b.dump());  // byte-identical modulo timing
    CHECK(a["failures"] == 0);
}

TEST_CASE("bubble-check") {
    CHECK(run_cli("bubble-check 4") == 0);
    CHECK(run_cli("bubble-check 1") == 0);
}

TEST_CASE("exit codes for bad input") {
    CHECK(run_cli("no-such-command") == 2);
    CHECK(run_cli("count tangled /nonexistent.json") == 2);
    CHECK(run_cli("promote") == 2);

    const std::string chain5 = tmp_path("cli_chain5.json");
    REQUIRE(run_cli("generate chain --n 5 --out " + chain5) == 0);
    CHECK(run_cli("count tangled " + chain5 + " --cap 3") == 2);  // resource guard

    const std::string cyclic = tmp_path("cli_cyclic.json");
    std::ofstream(cyclic) << R"({"n":2,"covers":[[0,1],[1,0]]})";
    CHECK(run_cli("count tangled " + cyclic) == 2);

    CHECK(run_cli("formula unique-min --n 1 --r 1") == 2);
}
