#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tridyn/quadrangle.hpp"

using namespace tridyn;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

TEST_CASE("quadrangle validation and clamping") {
    CHECK_NOTHROW(ICQuadrangle(1.85, 1.75));
    CHECK_NOTHROW(ICQuadrangle(1.6, kPi / 2));  // square-side boundary
    CHECK_NOTHROW(ICQuadrangle(kPi / 2, kPi / 2));
    CHECK_THROWS_AS(ICQuadrangle(1.5, 1.4), InvalidQuadrangle);
    CHECK_THROWS_AS(ICQuadrangle(1.8, 1.9), InvalidQuadrangle);
    CHECK_THROWS_AS(ICQuadrangle(kPi, 1.8), InvalidQuadrangle);

    ICQuadrangle snapped(1.6, kPi / 2 - 5e-13);
    CHECK(snapped.beta() == kPi / 2);
    ICQuadrangle swapped(1.7, 1.7 + 5e-13);
    CHECK(swapped.beta() == swapped.alpha());
}

TEST_CASE("unit-inradius edges, frozen values") {
    QuadEdges e = quad_edges(ICQuadrangle(1.85, 1.75), EdgeMode::unit_inradius);
    CHECK(e.mode == EdgeMode::unit_inradius);
    CHECK(e.cd == doctest::Approx(2.5243987976).epsilon(1e-9));
    CHECK(e.bc == doctest::Approx(2.1621048924).epsilon(1e-9));
    CHECK(e.ab == doctest::Approx(1.9510140978).epsilon(1e-9));
    CHECK(e.da == doctest::Approx(1.5887201927).epsilon(1e-9));
    // Descending order.
    CHECK(e.cd >= e.bc);
    CHECK(e.bc >= e.ab);
    CHECK(e.ab >= e.da);
}

TEST_CASE("perimeter edges, frozen values and adjacent sums") {
    QuadEdges e = quad_edges(ICQuadrangle(1.85, 1.75), EdgeMode::perimeter_2pi);
    CHECK(e.cd == doctest::Approx(1.928131118020).epsilon(1e-9));
    CHECK(e.bc == doctest::Approx(1.651411705441).epsilon(1e-9));
    CHECK(e.ab == doctest::Approx(1.490180948149).epsilon(1e-9));
    CHECK(e.da == doctest::Approx(1.213461535570).epsilon(1e-9));
    CHECK(e.cd + e.bc + e.ab + e.da == doctest::Approx(kTwoPi).epsilon(1e-14));
    // Opposite edges of a circumscribed quadrangle pair up: cd+da = bc+ab.
    CHECK(e.cd + e.da == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(e.bc + e.ab == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("the two edge modes agree up to the perimeter rescale") {
    ICQuadrangle q(2.1, 1.9);
    QuadEdges u = quad_edges(q, EdgeMode::unit_inradius);
    QuadEdges p = quad_edges(q, EdgeMode::perimeter_2pi);
    double scale = kTwoPi / (u.cd + u.bc + u.ab + u.da);
    CHECK(p.cd == doctest::Approx(u.cd * scale).epsilon(1e-12));
    CHECK(p.bc == doctest::Approx(u.bc * scale).epsilon(1e-12));
    CHECK(p.ab == doctest::Approx(u.ab * scale).epsilon(1e-12));
    CHECK(p.da == doctest::Approx(u.da * scale).epsilon(1e-12));
}

TEST_CASE("map_h frozen step and obtuse sums") {
    ICQuadrangle q(1.85, 1.75);
    CHECK(obtuse_sum(q) == doctest::Approx(3.6).epsilon(1e-15));
    ICQuadrangle im = map_h(q);
    CHECK(im.alpha() == doctest::Approx(1.928131118020).epsilon(1e-9));
    CHECK(im.beta() == doctest::Approx(1.651411705441).epsilon(1e-9));
    CHECK(obtuse_sum(im) == doctest::Approx(3.579542823461).epsilon(1e-9));
}

TEST_CASE("the square is fixed under map_h") {
    ICQuadrangle sq(kPi / 2, kPi / 2);
    ICQuadrangle im = map_h(sq);
    CHECK(std::fabs(im.alpha() - kPi / 2) < 1e-12);
    CHECK(std::fabs(im.beta() - kPi / 2) < 1e-12);
}

TEST_CASE("map_h refuses output collapsing onto the degenerate line") {
    // Both angles nearly straight: the longest rescaled edge lands within
    // roundoff of pi, which no longer encodes a quadrangle.
    CHECK_THROWS_AS(map_h(ICQuadrangle(kPi - 5e-13, kPi - 1e-4)),
                    DegenerateOutput);
}
