#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("GENT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "GENT_CLI must point at the gent binary");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("entropy subcommand with both methods") {
    auto r = run("entropy --gen cycle 5 --dist uniform --method both");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(std::abs(j["result"]["fw"]["value_bits"].get<double>() - 1.3219280948873623) <= 2e-7);
    CHECK(std::abs(j["result"]["am"]["value_bits"].get<double>() - 1.3219280948873623) <= 2e-7);
    CHECK(j["result"]["abs_difference"].get<double>() <= 2e-7);
}

TEST_CASE("line graph modifier reproduces the reference value") {
    auto r = run("entropy --gen fig52 --line-graph --dist uniform");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(std::abs(j["result"]["fw"]["value_bits"].get<double>() - 1.75712) <= 1e-3);
}

TEST_CASE("missing input file exits 1") {
    CHECK(run("entropy missing.col").exit_code == 1);
    CHECK(run("entropy").exit_code == 1);
    CHECK(run("entropy --gen bogus 3").exit_code == 1);
}

TEST_CASE("budget exhaustion exits 2") {
    CHECK(run("entropy --gen petersen --dist uniform --budget 2 --tol 1e-13").exit_code == 2);
}

TEST_CASE("symmetry subcommand") {
    auto r = run("symmetry --gen petersen --line-of");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["symmetric"] == true);
    CHECK(j["result"]["criterion"] == "k-graph-line");

    auto star = run("symmetry --gen star 3");
    Json js = Json::parse(star.out);
    CHECK(js["result"]["symmetric"] == false);
    CHECK(js["result"]["criterion"] == "bipartite-matching");
}

TEST_CASE("fractional edge subcommand") {
    auto r = run("fractional-edge --gen petersen");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["value"] == "3/1");
    auto f52 = run("fractional-edge --gen fig52");
    CHECK(Json::parse(f52.out)["result"]["value"] == "7/2");
}

TEST_CASE("chromatic entropy subcommand") {
    auto r = run("chromatic-entropy --gen cycle 5 --dist uniform");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(std::abs(j["result"]["value_bits"].get<double>() - 1.5219280948873623) <= 1e-9);
}

TEST_CASE("generate emits DIMACS") {
    auto r = run("generate --gen kneser 5 2 --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("p edge 10 15") == 0);
}

TEST_CASE("distribution files are read") {
    std::string path = "/tmp/gent_test_dist.json";
    std::ofstream(path) << "[0.3, 0.2, 0.2, 0.1, 0.2]";
    auto r = run("chromatic-entropy --gen cycle 5 --dist " + path);
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(std::abs(j["result"]["value_bits"].get<double>() - 1.3609640474436812) <= 1e-9);
    CHECK(j["result"]["chi_H"] == 3);
    std::remove(path.c_str());
}

TEST_CASE("max entropy subcommand") {
    auto r = run("max-entropy --gen star 3 --tol 1e-4");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(std::abs(j["result"]["value_bits"].get<double>() - 1.0) <= 2e-4);
}

TEST_CASE("counting subcommand") {
    auto r = run("counting --gen cycle 6");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["perfect_matchings"] == 2);
    CHECK(j["result"]["bregman"]["holds"] == true);

    std::string path = "/tmp/gent_test_points.txt";
    std::ofstream(path) << "0 0 0\n0 0 1\n0 1 0\n0 1 1\n1 0 0\n1 0 1\n1 1 0\n1 1 1\n";
    auto s = run("counting --points " + path);
    REQUIRE(s.exit_code == 0);
    Json sj = Json::parse(s.out);
    CHECK(sj["result"]["n"] == 8);
    CHECK(sj["result"]["holds"] == true);
    std::remove(path.c_str());
}

TEST_CASE("unknown verify suite exits 1") {
    CHECK(run("verify --suite bogus").exit_code == 1);
}

TEST_CASE("cap override environment variable") {
    std::string save = "GENT_CAP_OVERRIDE=4 ";
    std::string cmd = save + cli_path() + " entropy --gen cycle 5 --dist uniform 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 256> buf;
    while (std::fread(buf.data(), 1, buf.size(), pipe) > 0) {}
    CHECK(WEXITSTATUS(pclose(pipe)) == 1); // enumeration cap now below n
}

TEST_CASE("verify output is deterministic for a fixed seed") {
    auto a = run("verify --suite properties --seed 7 --quick --threads 2");
    auto b = run("verify --suite properties --seed 7 --quick --threads 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("json output is byte-identical across runs") {
    auto a = run("entropy --gen cycle 5 --dist uniform --method both");
    auto b = run("entropy --gen cycle 5 --dist uniform --method both");
    CHECK(a.out == b.out);
    auto c = run("symmetry --gen fig52 --line-of");
    auto d = run("symmetry --gen fig52 --line-of");
    CHECK(c.out == d.out);
}
