#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "degen/serialize.hpp"
#include "degen/special.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(DEGEN_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

using namespace degen;

TEST_CASE("table subcommand", "[cli]") {
    auto csv = run_cli("table stirling --n-max 2 --r 0 --format csv 2>/dev/null");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "\"1\"\n\"0\",\"1\"\n\"0\",\"1 - λ\",\"1\"\n");

    auto json = run_cli("table stirling --n-max 1 --r 2 --format json 2>/dev/null");
    CHECK(json.exit_code == 0);
    Json j = Json::parse(json.out);
    CHECK(j.at("rows").dump() == R"([[["1"]],[["2"],["1"]]])");

    auto classical = run_cli("table stirling --n-max 3 --r 1 --lambda 0 --format csv 2>/dev/null");
    CHECK(classical.exit_code == 0);
    CHECK(classical.out == "1\n1,1\n1,3,1\n1,7,6,1\n");

    auto bad = run_cli("table stirling --n-max 1 --r 0 --lambda x7 2>&1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("bad character") != std::string::npos);

    auto unknown_kind = run_cli("table nope --n-max 1 --r 0 2>&1");
    CHECK(unknown_kind.exit_code == 2);
}

TEST_CASE("poly subcommand", "[cli]") {
    auto bell = run_cli("poly bell --p 2 --r 0 2>/dev/null");
    CHECK(bell.exit_code == 0);
    CHECK(bell.out == "x^2 + (1 - λ)x\n");

    auto ordered = run_cli("poly fubini --p 2 --r 0 --lambda 0 --x 1 2>/dev/null");
    CHECK(ordered.exit_code == 0);
    CHECK(ordered.out == "3\n");

    auto unit = run_cli("poly bell --p 0 --r 5 2>/dev/null");
    CHECK(unit.exit_code == 0);
    CHECK(unit.out == "1\n");

    // machine output round-trips through the ring serialization
    auto json = run_cli("poly bell --p 3 --r 2 --format json 2>/dev/null");
    CHECK(json.exit_code == 0);
    CHECK(xpoly_from_json(Json::parse(json.out)) == bell_r(3, 2));

    auto lam_only = run_cli("poly bell --p 2 --r 0 --lambda 0 2>/dev/null");
    CHECK(lam_only.out == "x^2 + x\n");

    auto x_only = run_cli("poly bell --p 2 --r 0 --x 1 2>/dev/null");
    CHECK(x_only.out == "2 - λ\n");

    auto negative = run_cli("poly bell --p -3 --r 0 2>&1");
    CHECK(negative.exit_code == 2);
}

TEST_CASE("check subcommand", "[cli]") {
    auto single = run_cli("check thm6_flat --p-max 1 --r-max 0 2>/dev/null");
    CHECK(single.exit_code == 0);
    CHECK(single.out.find("[PASS] thm6_flat p=0 r=0 order=12") != std::string::npos);
    CHECK(single.out.find("2/2 checks passed") != std::string::npos);

    auto bogus = run_cli("check bogus 2>&1");
    CHECK(bogus.exit_code == 2);
    CHECK(bogus.out.find("valid ids") != std::string::npos);

    auto none = run_cli("check 2>&1");
    CHECK(none.exit_code == 2);

    auto json = run_cli("check eq36 rstirling --n-max 4 --r-max 1 --format json 2>/dev/null");
    CHECK(json.exit_code == 0);
    Json j = Json::parse(json.out);
    CHECK(j.at("all_pass") == true);
    // registry order: eq36 reports come before rstirling reports
    CHECK(j.at("reports")[0].at("id") == "eq36");
    CHECK(j.at("reports").back().at("id") == "rstirling");

    // identical invocations are byte-identical
    auto again = run_cli("check eq36 rstirling --n-max 4 --r-max 1 --format json 2>/dev/null");
    CHECK(again.out == json.out);

    auto csv = run_cli("check thm4 --p-max 0 --r-max 0 --format csv 2>/dev/null");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("id,params,lambda,pass") != std::string::npos);
    CHECK(csv.out.find("thm4,\"p=0 r=0 order=12\",symbolic,true") != std::string::npos);
}

TEST_CASE("check honors the order environment override", "[cli]") {
    auto r = run_cli("check thm4 --p-max 0 --r-max 0 --format json 2>/dev/null");
    CHECK(Json::parse(r.out).at("reports")[0].at("params").at("order") == 12);

    std::string cmd = "env DEGEN_DEFAULT_ORDER=8 " + std::string(DEGEN_CLI_PATH) +
                      " check thm4 --p-max 0 --r-max 0 --format json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    pclose(pipe);
    CHECK(Json::parse(out).at("reports")[0].at("params").at("order") == 8);
}

TEST_CASE("dobinski subcommand", "[cli]") {
    auto ok = run_cli("dobinski --p 2 --r 0 --x 1 --lambda 0 --terms 40 --tol 1e-9 --format json 2>/dev/null");
    CHECK(ok.exit_code == 0);
    Json j = Json::parse(ok.out);
    CHECK(j.at("exact") == "2");
    CHECK(std::abs(j.at("float").get<double>() - 2.0) < 1e-9);
    CHECK(j.at("pass") == true);

    auto trivial = run_cli("dobinski --p 0 --r 3 --x 2 --lambda 1/3 --format json 2>/dev/null");
    CHECK(trivial.exit_code == 0);
    CHECK(std::abs(Json::parse(trivial.out).at("float").get<double>() - 1.0) < 1e-9);

    auto starved = run_cli("dobinski --p 5 --r 2 --x 1 --lambda 1/2 --terms 3 2>&1");
    CHECK(starved.exit_code == 1);
    CHECK(starved.out.find("--terms") != std::string::npos);

    auto bad_x = run_cli("dobinski --p 1 --r 0 --x 0 --lambda 0 2>&1");
    CHECK(bad_x.exit_code == 2);
}

TEST_CASE("top-level usage errors", "[cli]") {
    auto nothing = run_cli("2>&1");
    CHECK(nothing.exit_code == 2);
    auto help = run_cli("--help 2>/dev/null");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("table") != std::string::npos);
}
