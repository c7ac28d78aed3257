#include <cstdio>
#include <numbers>
#include <string>

#include "doctest.h"
#include "tridyn/dynamics.hpp"
#include "tridyn/io.hpp"

using namespace tridyn;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTT = 2.0 * std::numbers::pi / 3.0;

std::size_t count_occurrences(const std::string& hay, const std::string& pat) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(pat); pos != std::string::npos;
         pos = hay.find(pat, pos + pat.size())) {
        ++n;
    }
    return n;
}
}  // namespace

TEST_CASE("fmt17 round-trips doubles exactly") {
    for (double x : {kPi, 0.1, 4.0 / 3.0, 1e-300, -2.5e17, 0.0,
                     1.1107207345395915}) {
        CHECK(std::stod(fmt17(x)) == x);
    }
}

TEST_CASE("orbit CSV schema and exact round trip") {
    Orbit o = iterate(ExteriorTriple(1.0, 2.3, kTwoPi - 3.3), 6);
    std::string csv = orbit_to_csv(o);
    CHECK(csv.substr(0, 11) == "iter,a,b,c\n");
    auto rows = parse_csv_rows(csv);
    REQUIRE(rows.size() == o.states.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        REQUIRE(rows[k].size() == 4);
        CHECK(rows[k][0] == static_cast<double>(k));
        for (int i = 0; i < 3; ++i) CHECK(rows[k][i + 1] == o.states[k][i]);
    }
}

TEST_CASE("pair orbit CSV uses the two-angle schema") {
    Orbit o = iterate(ICQuadrangle(1.85, 1.75), 4);
    std::string csv = orbit_to_csv(o);
    CHECK(csv.substr(0, 16) == "iter,alpha,beta\n");
    auto rows = parse_csv_rows(csv);
    REQUIRE(rows.size() == o.states.size());
    CHECK(rows[0].size() == 3);
    CHECK(rows[1][1] == o.states[1][0]);
}

TEST_CASE("curve CSV carries the series name in a comment") {
    CurveSeries s = sample_curve(CurveName::GG, 0.0, kTT, 5);
    std::string csv = curve_to_csv(s);
    CHECK(csv.substr(0, 10) == "# name=GG\n");
    CHECK(csv.find("t,value\n") != std::string::npos);
    auto rows = parse_csv_rows(csv);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0][0] == s.samples[0][0]);
    CHECK(rows[4][1] == s.samples[4][1]);
}

TEST_CASE("parse_csv_rows rejects garbage cells") {
    CHECK_THROWS_AS(parse_csv_rows("iter,a\n0,1.5\nfoo,bar\n"), IOError);
}

TEST_CASE("orbit JSON carries convergence metadata") {
    Orbit o = iterate(InteriorTriple(1.0, 0.5, kPi - 1.5));
    auto j = orbit_to_json(o, kDefaultMaxIters, kDefaultTolF);
    CHECK(j["map"] == "f");
    CHECK(j["converged"] == true);
    CHECK(j["limit"] == "equilateral");
    CHECK(j["max_iters"] == kDefaultMaxIters);
    CHECK(j["tol"] == kDefaultTolF);
    CHECK(j["states"].size() == o.states.size());
    CHECK(j["states"][0].size() == 3);
    CHECK(j["states"][0][0] == 1.0);
    // Round trip through text.
    auto back = nlohmann::ordered_json::parse(j.dump());
    CHECK(back["states"].back()[2].get<double>() == o.states.back()[2]);
}

TEST_CASE("stability JSON fields") {
    StabilityReport rep =
        classify_fixed_point(InteriorTriple(kPi / 3, kPi / 3, kPi / 3));
    auto j = stability_to_json(rep);
    CHECK(j["map"] == "f");
    CHECK(j["fixed_point"].size() == 3);
    CHECK(j["classification"] == "attracting");
    CHECK(j["eigenvalues"].size() == 2);
    CHECK(j["eigenvalues"][0]["im"] == 0.0);
    CHECK(j["spectral_radius"].get<double>() == rep.spectral_radius);

    auto h = stability_to_json(
        classify_fixed_point(ICQuadrangle(kPi / 2, kPi / 2)));
    CHECK(h["fixed_point"].size() == 2);
    CHECK(h["classification"] == "repelling");
}

TEST_CASE("SVG output is deterministic and structurally sound") {
    CurveSeries s = sample_curve(CurveName::GG, 0.0, kTT, 40);
    std::string one = emit_svg({s}, true);
    std::string two = emit_svg({s}, true);
    CHECK(one == two);
    CHECK(one.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    CHECK(count_occurrences(one, "<polyline") == 2);  // diagonal + series
    CHECK(one.find("stroke-dasharray=\"6,4\"") != std::string::npos);
    CHECK(one.find(">GG</text>") != std::string::npos);

    std::string no_diag = emit_svg({s}, false);
    CHECK(count_occurrences(no_diag, "<polyline") == 1);
    CHECK(no_diag.find("stroke-dasharray") == std::string::npos);

    CurveSeries u = sample_curve(CurveName::U_first, 0.1, kPi / 2, 40);
    CurveSeries w = sample_curve(CurveName::W_first, 0.1, kPi / 2, 40);
    std::string both = emit_svg({u, w}, true);
    CHECK(count_occurrences(both, "<polyline") == 3);
}

TEST_CASE("SVG input validation") {
    CHECK_THROWS_AS(emit_svg({}, false), IOError);
    CurveSeries tiny{CurveName::GG, {{0.0, 0.0}}};
    CHECK_THROWS_AS(emit_svg({tiny}, false), IOError);
    CurveSeries a = sample_curve(CurveName::GG, 0.0, 1.0, 10);
    CurveSeries b = sample_curve(CurveName::GG, 0.5, 1.5, 10);
    CHECK_THROWS_AS(emit_svg({a, b}, false), IOError);
}

TEST_CASE("text file round trip") {
    std::string path = "/tmp/tridyn_io_test.txt";
    write_text_file(path, "alpha,beta\n1,2\n");
    CHECK(read_text_file(path) == "alpha,beta\n1,2\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file("/tmp/tridyn_does_not_exist_42.txt"),
                    IOError);
}
