#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tridyn/dynamics.hpp"

using namespace tridyn;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const InteriorTriple kEq{kPi / 3, kPi / 3, kPi / 3};
const ExteriorTriple kCenter{kTwoPi / 3, kTwoPi / 3, kTwoPi / 3};
}  // namespace

TEST_CASE("convergence criteria") {
    CHECK(f_converged({kPi / 3 + 1e-10, kPi / 3, kPi / 3 - 1e-10}, 1e-9));
    CHECK_FALSE(f_converged({kPi / 2, kPi / 3, kPi / 6}, 1e-9));
    CHECK(g_converged({kPi - 1e-9, kPi - 1e-9, 2e-9}, 1e-6));
    CHECK_FALSE(g_converged({3.0, 3.0, kTwoPi - 6.0}, 1e-6));
    CHECK(h_converged(kPi - 1e-7, kPi - 1e-7, 1e-6));
    CHECK_FALSE(h_converged(kPi - 1e-3, kPi - 1e-5, 1e-6));
}

TEST_CASE("f orbit from the fixed point stops immediately") {
    Orbit o = iterate(kEq);
    CHECK(o.map_id == MapId::f);
    CHECK(o.converged);
    CHECK(o.limit_id == LimitId::equilateral);
    CHECK(o.states.size() == 1);
    CHECK(o.iterations_used == 0);
}

TEST_CASE("f orbit contracts to the equilateral point") {
    Orbit o = iterate(InteriorTriple(1.0, 0.5, kPi - 1.5));
    CHECK(o.converged);
    CHECK(o.limit_id == LimitId::equilateral);
    CHECK(o.iterations_used <= 60);
    CHECK(o.iterations_used == o.states.size() - 1);
    CHECK(f_converged(o.states.back(), kDefaultTolF));
}

TEST_CASE("g orbit honors the iteration cap and records every state") {
    Orbit o = iterate(ExteriorTriple(1.0, 2.3, kTwoPi - 3.3), 6);
    CHECK(o.map_id == MapId::g);
    CHECK(o.states.size() == 7);
    CHECK(o.iterations_used == 6);
    CHECK_FALSE(o.converged);
    // First step agrees with the single-step map bit for bit.
    ExteriorTriple one = map_g(ExteriorTriple(1.0, 2.3, kTwoPi - 3.3));
    for (int i = 0; i < 3; ++i) CHECK(o.states[1][i] == one[i]);
    // Convergence flag always reflects the criterion on the last state.
    CHECK(o.converged == g_converged(o.states.back(), kDefaultTolG));
}

TEST_CASE("orbits are deterministic") {
    Orbit a = iterate(ExteriorTriple(1.9, 2.0, kTwoPi - 3.9), 50);
    Orbit b = iterate(ExteriorTriple(1.9, 2.0, kTwoPi - 3.9), 50);
    REQUIRE(a.states.size() == b.states.size());
    for (std::size_t k = 0; k < a.states.size(); ++k) {
        for (int i = 0; i < 3; ++i) CHECK(a.states[k][i] == b.states[k][i]);
    }
}

TEST_CASE("h orbit runs to the degenerate quadrangle") {
    Orbit o = iterate(ICQuadrangle(1.85, 1.75));
    CHECK(o.map_id == MapId::h);
    CHECK(o.converged);
    CHECK(o.limit_id == LimitId::degenerate_quadrangle);
    const auto& last = o.states.back();
    CHECK(std::hypot(kPi - last[0], kPi - last[1]) <= kDefaultTolH);
    // Pairs are stored (alpha, beta) with the third slot unused.
    for (const auto& s : o.states) CHECK(s[2] == 0.0);
}

TEST_CASE("jacobian of f at the equilateral point is scalar") {
    Mat2 j = jacobian_at(kEq);
    double lam = kPi / (3.0 * std::sqrt(3.0));
    CHECK(j[0][0] == doctest::Approx(lam).epsilon(1e-5));
    CHECK(j[1][1] == doctest::Approx(lam).epsilon(1e-5));
    CHECK(std::fabs(j[0][1]) < 1e-5);
    CHECK(std::fabs(j[1][0]) < 1e-5);
}

TEST_CASE("jacobian of g at the center is minus twice f's") {
    Mat2 j = jacobian_at(kCenter);
    double lam = -2.0 * kPi / (3.0 * std::sqrt(3.0));
    CHECK(j[0][0] == doctest::Approx(lam).epsilon(1e-5));
    CHECK(j[1][1] == doctest::Approx(lam).epsilon(1e-5));
    CHECK(std::fabs(j[0][1]) < 1e-5);
    CHECK(std::fabs(j[1][0]) < 1e-5);
}

TEST_CASE("jacobian step must stay in its validity window") {
    CHECK_THROWS_AS(jacobian_at(kEq, 1e-9), OutOfRange);
    CHECK_THROWS_AS(jacobian_at(kEq, 1e-2), OutOfRange);
}

TEST_CASE("fixed point classification for all three maps") {
    StabilityReport f = classify_fixed_point(kEq);
    CHECK(f.classification == Stability::attracting);
    CHECK(f.spectral_radius ==
          doctest::Approx(kPi / (3.0 * std::sqrt(3.0))).epsilon(1e-5));

    StabilityReport g = classify_fixed_point(kCenter);
    CHECK(g.classification == Stability::repelling);
    CHECK(g.spectral_radius ==
          doctest::Approx(2.0 * kPi / (3.0 * std::sqrt(3.0))).epsilon(1e-5));

    StabilityReport h = classify_fixed_point(ICQuadrangle(kPi / 2, kPi / 2));
    CHECK(h.classification == Stability::repelling);
    CHECK(h.spectral_radius ==
          doctest::Approx(kPi / (2.0 * std::sqrt(2.0))).epsilon(1e-5));
    CHECK(h.spectral_radius ==
          doctest::Approx(1.1107207345395915).epsilon(1e-5));
}

TEST_CASE("classification refuses points that are not fixed") {
    CHECK_THROWS_AS(classify_fixed_point(InteriorTriple(1.0, 1.0, kPi - 2.0)),
                    NotAFixedPoint);
    CHECK_THROWS_AS(
        classify_fixed_point(ExteriorTriple(2.0, 2.0, kTwoPi - 4.0)),
        NotAFixedPoint);
    CHECK_THROWS_AS(classify_fixed_point(ICQuadrangle(1.85, 1.75)),
                    NotAFixedPoint);
}
