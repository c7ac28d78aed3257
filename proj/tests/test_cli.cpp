#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tridyn/cli.hpp"
#include "tridyn/io.hpp"

using namespace tridyn;

namespace {
constexpr double kTT = 2.0 * std::numbers::pi / 3.0;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("iterate: exterior start reproduces the reference orbit") {
    // CSV is the default format.
    CliRun r = run({"iterate", "--map", "g", "--angles", "1.0,2.3,2.9832",
                    "--exterior", "--max-iters", "6"});
    REQUIRE(r.code == 0);
    auto rows = parse_csv_rows(r.out);
    REQUIRE(rows.size() == 7);  // start + six steps
    const double want[6][3] = {
        {3.0300, 2.6851, 0.5680}, {0.6418, 2.5404, 3.1008},
        {3.1217, 2.9489, 0.2124}, {0.2953, 2.8492, 3.1385},
        {3.1408, 3.1097, 0.0324}, {0.0673, 3.0742, 3.1415},
    };
    for (int k = 0; k < 6; ++k) {
        for (int i = 0; i < 3; ++i) {
            CHECK(rows[k + 1][i + 1] ==
                  doctest::Approx(want[k][i]).epsilon(1e-3));
        }
    }
}

TEST_CASE("iterate: json format carries metadata") {
    CliRun r = run({"iterate", "--map", "f", "--angles", "1.0,0.5,1.6416",
                    "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["map"] == "f");
    CHECK(j["converged"] == true);
    CHECK(j["limit"] == "equilateral");
}

TEST_CASE("iterate: table format and degree display") {
    CliRun r = run({"iterate", "--map", "f", "--angles",
                    "1.0471975511965976,1.0471975511965976,1.0471975511965976",
                    "--format", "table", "--degrees"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("converged: yes") != std::string::npos);
    CHECK(r.out.find("60") != std::string::npos);  // degrees shown
}

TEST_CASE("quad iterate: runs to the degenerate pair") {
    CliRun r = run({"quad", "iterate", "--alpha", "1.85", "--beta", "1.75",
                    "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["map"] == "h");
    CHECK(j["converged"] == true);
    CHECK(j["limit"] == "degenerate_quadrangle");
    CHECK(j["states"][0].size() == 2);
}

TEST_CASE("curve: rounded bounds clamp onto the exact domain") {
    CliRun r = run({"curve", "--name", "gg", "--from", "0", "--to", "2.0944",
                    "--samples", "11"});
    REQUIRE(r.code == 0);
    auto rows = parse_csv_rows(r.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0][0] == 0.0);
    CHECK(rows[10][0] == kTT);  // clamped to 2*pi/3 exactly
    CHECK(rows[10][1] == doctest::Approx(kTT).epsilon(1e-12));
}

TEST_CASE("curve: a comma pair emits two CSV blocks") {
    CliRun r = run({"curve", "--name", "u,w", "--from", "0", "--to",
                    "1.5707963267948966", "--samples", "20"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# name=U_first") != std::string::npos);
    CHECK(r.out.find("# name=W_first") != std::string::npos);
}

TEST_CASE("curve: svg output is deterministic") {
    std::string path = "/tmp/tridyn_cli_gg.svg";
    std::vector<std::string> args = {"curve",     "--name", "gg",
                                     "--from",    "0",      "--to",
                                     "2.0944",    "--samples", "50",
                                     "--out",     path,     "--diagonal"};
    REQUIRE(run(args).code == 0);
    std::string one = read_text_file(path);
    REQUIRE(run(args).code == 0);
    std::string two = read_text_file(path);
    CHECK(one == two);
    CHECK(one.substr(0, 4) == "<svg");
    CHECK(one.find("stroke-dasharray") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("fixed-point: json stability reports") {
    CliRun f = run({"fixed-point", "--map", "f"});
    REQUIRE(f.code == 0);
    CHECK(nlohmann::json::parse(f.out)["classification"] == "attracting");

    CliRun h = run({"fixed-point", "--map", "h"});
    REQUIRE(h.code == 0);
    auto jh = nlohmann::json::parse(h.out);
    CHECK(jh["classification"] == "repelling");
    CHECK(jh["fixed_point"].size() == 2);
}

TEST_CASE("invert: reports a small residual") {
    CliRun r = run({"invert", "--map", "g", "--angles", "2.0,2.1,2.1832",
                    "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["residual"].get<double>() < 1e-8);
    CHECK(j["preimage"].size() == 3);
}

TEST_CASE("verify: region suite passes, exit 0") {
    CliRun r = run({"verify", "--suite", "regions", "--samples", "200",
                    "--seed", "42"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify: orbit suite reports the known float-precision reds") {
    CliRun r = run({"verify", "--suite", "orbits", "--samples", "1000",
                    "--seed", "42"});
    CHECK(r.code == 2);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("checks failed") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({"iterate", "--map", "q", "--angles", "1,1,1"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CliRun two = run({"iterate", "--map", "f", "--angles", "1.0,0.5"});
    CHECK(two.code == 1);
    CHECK(two.err.find("error:") != std::string::npos);
    // Sum far from the required constraint: rejected, not renormalized.
    CliRun bad = run({"iterate", "--map", "f", "--angles", "1.0,1.0,1.0"});
    CHECK(bad.code == 1);
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"iterate", "--help"}).code == 0);
}
