// Runs the yangian executable and checks exit codes, JSON shape and the
// golden text of `show`. Set YANGIAN_UPDATE_GOLDEN=1 to rewrite the goldens.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + YANGIAN_CLI + std::string(" ") + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void golden(const std::string& name, const std::string& args) {
    const Run r = run(args);
    REQUIRE(r.code == 0);
    const std::string path = std::string(YANGIAN_GOLDEN_DIR) + "/" + name;
    const char* update = std::getenv("YANGIAN_UPDATE_GOLDEN");
    if (update && std::string(update) == "1") std::ofstream(path) << r.out;
    CHECK(r.out == read_file(path));
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("check thm2 --m 1 --n 1 --order 5 --json").code == 0);
    CHECK(run("check gauss --m 1 --n 1 --order 3 --convention twisted").code == 1);
    CHECK(run("check bogus --m 1 --n 1").code == 2);
    CHECK(run("check case1 --m 1 --n 1").code == 2);
    CHECK(run("check gauss --m 1 --n 1 --convention sideways").code == 2);
    CHECK(run("check gauss --m 9 --n 1").code == 2);
    CHECK(run("check gauss --m 1 --n 1 --order 40").code == 2);
    CHECK(run("nf --m 1 --n 1 't[1,1'").code == 2);
    CHECK(run("nf --m 1 --n 1 't[3,1,1]'").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("check thm1 --m 2 --n 1 --max-terms 5").code == 3);
    CHECK(run("check thm1 --m 2 --n 1", "YANGIAN_MAX_TERMS=5").code == 3);
    CHECK(run("check thm1 --m 1 --n 1 --order 3", "YANGIAN_MAX_TERMS=100000").code == 0);
}

TEST_CASE("normal forms") {
    const Run r = run("nf --m 1 --n 1 't[1,2,1] t[1,2,1]'");
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
    CHECK(run("nf --m 1 --n 1 '[t[1,2,1], t[2,1,1]]'").out == "-t[1,1,1] + t[2,2,1]\n");
    CHECK(run("nf --m 1 --n 1 --order 3 'ber - d(1)*d(2)^-1'").out == "u^-0: 0\nu^-1: 0\nu^-2: 0\nu^-3: 0\n");
}

TEST_CASE("json report schema") {
    const Run r = run("check thm2 --m 1 --n 1 --order 5 --json");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("check") == "thm2_centrality");
    CHECK(j.at("m") == 1);
    CHECK(j.at("n") == 1);
    CHECK(j.at("order") == 5);
    CHECK(j.at("convention") == "plain");
    CHECK(j.at("verdict") == "pass");
    CHECK(j.at("witnesses").is_array());
    CHECK(j.at("elapsed_ms").is_number());

    const auto fail = nlohmann::json::parse(run("check gauss --m 1 --n 1 --order 3 --convention twisted --json").out);
    CHECK(fail.at("verdict") == "fail");
    CHECK(!fail.at("witnesses").empty());

    const auto all = nlohmann::json::parse(run("check all --m 1 --n 1 --order 3 --json").out);
    REQUIRE(all.is_array());
    for (const auto& report : all) CHECK(report.at("verdict") == "pass");
}

TEST_CASE("auto convention resolves to plain") {
    const auto j = nlohmann::json::parse(run("check gauss --m 1 --n 1 --order 3 --convention auto --json").out);
    CHECK(j.at("convention") == "plain");
    CHECK(j.at("verdict") == "pass");
}

TEST_CASE("output does not depend on the worker count") {
    auto strip = [](const std::string& text) {
        auto j = nlohmann::json::parse(text);
        for (auto& report : j) report.erase("elapsed_ms");
        return j.dump();
    };
    const std::string one = strip(run("check all --m 2 --n 1 --order 2 --json --jobs 1").out);
    const std::string four = strip(run("check all --m 2 --n 1 --order 2 --json --jobs 4").out);
    CHECK(one == four);
}

TEST_CASE("show goldens") {
    golden("show_ber_1_1_3.txt", "show ber --m 1 --n 1 --order 3");
    golden("show_qdet_2_1_2.txt", "show qdet --m 2 --n 1 --order 2");
    golden("show_gauss_1_1_2.txt", "show gauss --m 1 --n 1 --order 2");
    golden("show_gauss_2_1_2.txt", "show gauss --m 2 --n 1 --order 2");
    CHECK(run("show nothing --m 1 --n 1").code == 2);
    const auto j = nlohmann::json::parse(run("show ber --m 1 --n 1 --order 2 --json").out);
    CHECK(j.at("series").size() == 3);
}

TEST_CASE("oracle subcommand") {
    const Run rtt = run("oracle rtt --m 1 --n 1");
    CHECK(rtt.code == 0);
    CHECK(rtt.out.find("tensor embedding koszul") != std::string::npos);
    CHECK(run("oracle rep --m 2 --n 2").code == 0);
    CHECK(run("oracle moon --m 1 --n 1").code == 2);
}
