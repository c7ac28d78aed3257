#include "tridyn/quadrangle.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tridyn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kBoundaryClamp = 1e-12;

}  // namespace

ICQuadrangle::ICQuadrangle(double alpha, double beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw InvalidQuadrangle("non-finite obtuse angle");
    }
    // Snap roundoff-level boundary violations onto the boundary.
    if (alpha < kHalfPi && kHalfPi - alpha <= kBoundaryClamp) alpha = kHalfPi;
    if (beta < kHalfPi && kHalfPi - beta <= kBoundaryClamp) beta = kHalfPi;
    if (beta > alpha && beta - alpha <= kBoundaryClamp) beta = alpha;
    if (!(beta >= kHalfPi) || !(beta <= alpha) || !(alpha < kPi)) {
        throw InvalidQuadrangle(
            "obtuse pair must satisfy pi/2 <= beta <= alpha < pi, got (" +
            std::to_string(alpha) + ", " + std::to_string(beta) + ")");
    }
    alpha_ = alpha;
    beta_ = beta;
}

namespace detail {

std::array<double, 2> h_edges_raw(double a, double b) {
    double cd = kPi * std::sin(a / 2) * std::sin(b / 2) /
                std::cos((a - b) / 2);
    double bc = kPi * std::sin(a / 2) * std::cos(b / 2) /
                std::sin((a + b) / 2);
    return {cd, bc};
}

}  // namespace detail

QuadEdges quad_edges(const ICQuadrangle& q, EdgeMode mode) {
    double a = q.alpha();
    double b = q.beta();
    if (mode == EdgeMode::unit_inradius) {
        double ta = std::tan(a / 2);
        double tb = std::tan(b / 2);
        // Descending tangent-length chain for alpha >= beta >= pi/2.
        return {ta + tb, ta + 1.0 / tb, tb + 1.0 / ta, 1.0 / ta + 1.0 / tb,
                EdgeMode::unit_inradius};
    }
    auto [cd, bc] = detail::h_edges_raw(a, b);
    return {cd, bc, kPi - bc, kPi - cd, EdgeMode::perimeter_2pi};
}

ICQuadrangle map_h(const ICQuadrangle& q) {
    auto [cd, bc] = detail::h_edges_raw(q.alpha(), q.beta());
    if (cd >= kPi - 1e-12) {
        throw DegenerateOutput(
            "largest obtuse angle reached the degenerate limit pi");
    }
    return ICQuadrangle(cd, bc);
}

double obtuse_sum(const ICQuadrangle& q) { return q.alpha() + q.beta(); }

}  // namespace tridyn
