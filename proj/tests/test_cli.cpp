#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(TILDEISO_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("dist") {
    CHECK(run("dist 1011 0110").out == "2\n");
    CHECK(run("dist 1011 0110").code == 0);
    CHECK(run("dist 100 001").out == "2\n");
    CHECK(run("dist 010 101 --explain").out == "2\nS1 R3\n");
    CHECK(run("dist 012 120 --oracle --alphabet 012").out == "2\n");

    CHECK(run("dist 10 100").code == 2);
    CHECK(run("dist 012 120").code == 2);  // not binary, no --alphabet
    const std::string long0(17, '0');
    const std::string long1(17, '1');
    CHECK(run("dist " + long0 + " " + long1 + " --oracle").code == 4);
}

TEST_CASE("transform") {
    CHECK(run("transform 1011 0110").out == "1011 -S1-> 0111 -R4-> 0110\n");
    const auto all = run("transform 11000 10110 --all");
    CHECK(all.out ==
          "11000 -S2-> 10100 -R4-> 10110\n"
          "11000 -R4-> 11010 -S2-> 10110\n");
    CHECK(run("transform 11000 10110 --avoid 1010").out == "none\n");
    CHECK(run("transform 1011 0110 --avoid 0000").code == 0);
}

TEST_CASE("witness-check emits a verdict") {
    const auto result = run("witness-check 1010 11000 10110");
    CHECK(result.code == 0);
    const auto j = nlohmann::json::parse(result.out);
    CHECK(j["passed"] == true);
    CHECK(j["distance"] == 2);
    CHECK(j["blocked"].size() == 2);
}

TEST_CASE("overlaps table") {
    const auto table = run("overlaps 10010110");
    CHECK(table.code == 0);
    CHECK(table.out.find("SS") != std::string::npos);
    const auto j = nlohmann::json::parse(run("overlaps 1010 --json").out);
    CHECK(j.size() == 3);
    CHECK(j[0]["realizations"].size() == 2);
}

TEST_CASE("witness") {
    const auto found = run("witness 1010");
    CHECK(found.code == 0);
    CHECK(found.out.find("10110") != std::string::npos);
    const auto none = run("witness 111000");
    CHECK(none.code == 3);

    const auto j = nlohmann::json::parse(run("witness 101 --json").out);
    CHECK(j["kind"] == "swap-overlap");
    CHECK(j["verdict"]["passed"] == true);
}

TEST_CASE("classify") {
    const auto text = run("classify 1010 --max-len 8");
    CHECK(text.code == 0);
    CHECK(text.out.find("tilde: non-isometric") != std::string::npos);
    CHECK(text.out.find("ham: isometric") != std::string::npos);

    const auto j = nlohmann::json::parse(run("classify 111000 --max-len 8 --json").out);
    CHECK(j["tilde_status"] == "isometric-up-to-8");
    CHECK(j["ham_status"] == "non-isometric");
}

TEST_CASE("survey") {
    const auto tsv = run("survey --len 2");
    CHECK(tsv.code == 0);
    CHECK(tsv.out.find("word\tlength") == 0);
    const auto j = nlohmann::json::parse(run("survey --len 2 --out json").out);
    CHECK(j.size() == 4);
    CHECK(j[0]["word"] == "00");
}

TEST_CASE("audits") {
    const auto prop2 = run("audit prop2 --len 2");
    CHECK(prop2.code == 0);
    CHECK(prop2.out.find("0 violation(s)") != std::string::npos);
    const auto subgraph = run("audit subgraph 1010 --len 5");
    CHECK(subgraph.code == 0);
    CHECK(subgraph.out.find("mismatching pair(s)") != std::string::npos);
}

TEST_CASE("bad usage and budgets") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate 10").code == 2);
    CHECK(run("dist 10x01 10001").code == 2);
    CHECK(run("--help").code == 0);

    CHECK(run("transform 010 101 --all", "TILDE_ISO_BUDGET=1").code == 4);
    CHECK(run("transform 010 101 --all", "TILDE_ISO_BUDGET=100").code == 0);
    CHECK(run("dist 1011 0110", "TILDE_ISO_BUDGET=nope").code == 2);
}
