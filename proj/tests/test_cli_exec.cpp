// End-to-end checks of the command-line surface: flags, report documents and
// the 0/1/2 exit-code convention, run against the built binary.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "smallarr/io.hpp"

#ifndef SMALLARR_CLI_PATH
#define SMALLARR_CLI_PATH "smallarr"
#endif
#ifndef SMALLARR_FIXTURES_DIR
#define SMALLARR_FIXTURES_DIR "fixtures"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(SMALLARR_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(SMALLARR_FIXTURES_DIR) + "/" + name + ".json";
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("analyze reports smallness") {
    const auto result = run_cli("analyze " + fixture("example05"));
    CHECK(result.exit_code == 0);
    const auto doc = smallarr::Json::parse(result.output);
    CHECK(doc["small"] == true);
    CHECK(doc["chi_w_min"] == 5);
    CHECK(doc["span_rank"] == 5);
    CHECK(doc["ordering"].is_array());
}

TEST_CASE("verify distinguishes orders by exit code") {
    CHECK(run_cli("verify " + fixture("example05") + " --order 0,1,2,3").exit_code == 0);
    const auto reverse = run_cli("verify " + fixture("example05") + " --order 3,2,1,0");
    CHECK(reverse.exit_code == 2);
    const auto doc = smallarr::Json::parse(reverse.output);
    CHECK(doc["ok"] == false);
    CHECK(doc["first_failure"] == 2);
}

TEST_CASE("order command") {
    CHECK(run_cli("order " + fixture("path_of_3_lines")).exit_code == 0);
    CHECK(run_cli("order " + fixture("triangle_of_lines")).exit_code == 2);
}

TEST_CASE("equations emits the document schema") {
    const auto result = run_cli("equations " + fixture("path_of_3_lines") +
                                " --order 0,1,2 --check");
    CHECK(result.exit_code == 0);
    const auto doc = smallarr::Json::parse(result.output);
    CHECK(doc["mu"] == 3);
    CHECK(doc["degree2_rank"] == 3);
    CHECK(doc["quadrics"].is_array());
    CHECK(doc["quadrics"].size() >= 3);
    for (const auto& q : doc["quadrics"]) {
        CHECK(q.contains("left"));
        CHECK(q.contains("right"));
        CHECK(q.contains("summand"));
    }
    CHECK(doc["check"]["ok"] == true);

    CHECK(run_cli("equations " + fixture("path_of_3_lines") + " --order 0,2,1").exit_code == 2);
}

TEST_CASE("project command") {
    const auto result =
        run_cli("project " + fixture("example05") + " --component 1 --point 0,0,1,0,0");
    CHECK(result.exit_code == 0);
    const auto doc = smallarr::Json::parse(result.output);
    CHECK(doc["arrangement"]["ambient_rank"] == 4);
    CHECK(doc["merged"].size() == 1);

    // precondition violations are input errors
    CHECK(run_cli("project " + fixture("example05") + " --component 0 --point 1,0,0,0,0")
              .exit_code == 1);
}

TEST_CASE("graph commands") {
    CHECK(run_cli("graph-chordal " + fixture("diamond")).exit_code == 0);
    CHECK(run_cli("graph-chordal " + fixture("c4")).exit_code == 2);

    const auto froberg = run_cli("graph-froberg " + fixture("c4"));
    CHECK(froberg.exit_code == 0);  // inconsistency, not non-chordality, is the failure
    const auto doc = smallarr::Json::parse(froberg.output);
    CHECK(doc["consistent"] == true);
    CHECK(doc["chordal"] == false);
    CHECK(doc["small"] == false);
}

TEST_CASE("random round-trips through analyze") {
    const auto result = run_cli("random --components 4 --ambient 5 --seed 7");
    CHECK(result.exit_code == 0);
    const auto arr = smallarr::load_arrangement(result.output);
    CHECK(arr.size() == 4);
    CHECK(smallarr::is_small(arr).small);

    // deterministic in the seed
    CHECK(run_cli("random --components 4 --ambient 5 --seed 7").output == result.output);
    CHECK(run_cli("random --components 4 --ambient 3 --seed 7").exit_code == 1);
}

TEST_CASE("selfcheck filter and exit codes") {
    const auto result = run_cli("selfcheck --filter example05.small");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("PASS example05.small") != std::string::npos);
}

TEST_CASE("input errors exit 1") {
    CHECK(run_cli("analyze /no/such/file.json").exit_code == 1);
    CHECK(run_cli("verify " + fixture("example05") + " --order 0,1").exit_code == 1);
}

TEST_SUITE_END();
