#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    std::string cmd = env_prefix + " " + std::string(MATCHDECK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/matchdeck_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("poly prints canonical text", "[cli]") {
    RunResult r = run_cli("poly --graph6 A_");
    CHECK(r.status == 0);
    CHECK(r.out == "x^2 + y\n");
    CHECK(run_cli("poly --cycle 6").out == "x^6 + 6*x^4*y + 9*x^2*y^2 + 2*y^3\n");
    CHECK(run_cli("poly --cycle 2").out == "x^2 + 2*y\n");
    CHECK(run_cli("poly --cycle 3 --cycle 3 --union").out == "x^6 + 6*x^4*y + 9*x^2*y^2\n");
}

TEST_CASE("poly emits JSON on request", "[cli]") {
    RunResult r = run_cli("poly --path 2 --format json");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j == nlohmann::json::parse(R"([[2,0,"1"],[0,1,"1"]])"));
}

TEST_CASE("parse failures exit 2 with no output", "[cli]") {
    CHECK(run_cli("poly --graph6 'E?\?'").status == 2);
    CHECK(run_cli("poly --graph6 'E?\?'").out.empty());
    CHECK(run_cli("poly --cycle 1").status == 2);
    CHECK(run_cli("poly").status == 2);
    CHECK(run_cli("poly --cycle 3 --path 2").status == 2);
    CHECK(run_cli("poly --no-such-flag").status == 2);
    std::string bad_edges = write_temp("bad_edges.txt", "2 2\n0 1\n");
    CHECK(run_cli("poly --edges " + bad_edges).status == 2);
}

TEST_CASE("capacity violations exit 3", "[cli]") {
    CHECK(run_cli("search --n 8").status == 3);
}

TEST_CASE("reconstruct exits 4 when np is undetermined", "[cli]") {
    std::string deck_path = "/tmp/matchdeck_test_c6_deck.json";
    REQUIRE(run_cli("deck --cycle 6 --out " + deck_path).status == 0);

    RunResult open = run_cli("reconstruct " + deck_path);
    CHECK(open.status == 4);
    CHECK(open.out.find("method: undetermined") != std::string::npos);
    CHECK(open.out.find("perfect matchings: undetermined") != std::string::npos);

    RunResult supplied = run_cli("reconstruct " + deck_path + " --np 2");
    CHECK(supplied.status == 0);
    CHECK(supplied.out.find("polynomial: x^6 + 6*x^4*y + 9*x^2*y^2 + 2*y^3") != std::string::npos);

    RunResult json = run_cli("reconstruct " + deck_path + " --np 2 --format json");
    CHECK(json.status == 0);
    nlohmann::json j = nlohmann::json::parse(json.out);
    CHECK(j["method"] == "externally-supplied");
    CHECK(j["perfect_matchings"] == "2");
}

TEST_CASE("forest hint reconstructs a path deck", "[cli]") {
    std::string deck_path = "/tmp/matchdeck_test_p4_deck.json";
    REQUIRE(run_cli("deck --path 4 --out " + deck_path).status == 0);
    RunResult r = run_cli("reconstruct " + deck_path + " --hint forest");
    CHECK(r.status == 0);
    CHECK(r.out.find("method: forest-rule") != std::string::npos);
    CHECK(r.out.find("polynomial: x^4 + 3*x^2*y + y^2") != std::string::npos);
}

TEST_CASE("inconsistent decks exit 5", "[cli]") {
    std::string bad = write_temp("bad_deck.json",
                                 R"({"n":3,"cards":[[[2,0,"1"]],[[2,0,"1"]],[[2,0,"3"]]]})");
    CHECK(run_cli("reconstruct " + bad).status == 5);
}

TEST_CASE("verify-family prints a PASS line per clause", "[cli]") {
    RunResult r = run_cli("verify-family --k 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS: C6 has exactly 2 perfect matchings") != std::string::npos);
    CHECK(r.out.find("PASS: C3+C3 has exactly 0 perfect matchings") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run_cli("verify-family --k 2 --complement").status == 2);
}

TEST_CASE("search reports the pair count and writes JSON", "[cli]") {
    std::string out_path = "/tmp/matchdeck_test_search6.json";
    RunResult r = run_cli("search --n 6 --out " + out_path);
    CHECK(r.status == 0);
    CHECK(r.out.find("4 pairs found") != std::string::npos);
    std::ifstream f(out_path);
    nlohmann::json report = nlohmann::json::parse(f);
    CHECK(report.is_array());
    CHECK(report.size() == 4);
}

TEST_CASE("memo cap env var is honored", "[cli]") {
    CHECK(run_cli("poly --cycle 3", "MATCHDECK_MEMO_CAP=0").status == 0);
    CHECK(run_cli("poly --cycle 3", "MATCHDECK_MEMO_CAP=abc").status == 2);
    CHECK(run_cli("poly --cycle 3", "MATCHDECK_MEMO_CAP=-1").status == 2);
}

TEST_CASE("stats summarizes matchings", "[cli]") {
    RunResult r = run_cli("stats --cycle 6");
    CHECK(r.status == 0);
    CHECK(r.out.find("perfect matchings: 2") != std::string::npos);
    CHECK(r.out.find("total matchings: 18") != std::string::npos);
    RunResult j = run_cli("stats --path 3 --format json");
    CHECK(nlohmann::json::parse(j.out)["total_matchings"] == "3");
}
