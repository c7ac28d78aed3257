#pragma once

// Orbit iteration and fixed-point analysis for the three maps.  Orbits are
// advanced on raw coordinate arrays so that every visited state is
// recorded, including near-degenerate ones where re-validation would
// reject; single-step users who want validation call the typed maps.

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "tridyn/maps.hpp"
#include "tridyn/quadrangle.hpp"
#include "tridyn/triple.hpp"

namespace tridyn {

enum class MapId { f, g, h };
enum class LimitId { equilateral, degenerate_triangle, degenerate_quadrangle,
                     none };

struct Orbit {
    MapId map_id;
    // One entry per visited state, the start included.  For h only the
    // first two slots are meaningful (alpha, beta); the third is zero.
    std::vector<std::array<double, 3>> states;
    bool converged = false;
    LimitId limit_id = LimitId::none;
    std::size_t iterations_used = 0;
};

using Mat2 = std::array<std::array<double, 2>, 2>;

enum class Stability { attracting, repelling, neutral };

struct StabilityReport {
    MapId map_id;
    std::array<double, 3> fixed_point;  // h uses the first two slots
    Mat2 jacobian;
    std::array<std::complex<double>, 2> eigenvalues;
    double spectral_radius;
    Stability classification;
};

inline constexpr double kDefaultTolF = 1e-9;
inline constexpr double kDefaultTolG = 1e-6;
inline constexpr double kDefaultTolH = 1e-6;
inline constexpr std::size_t kDefaultMaxIters = 10000;

// Convergence criteria, exposed for the verification suite:
// f — rotation-class distance to the equilateral triple below tol;
// g — sorted interior complements componentwise within tol of (0, 0, pi);
// h — Euclidean distance of the obtuse pair to (pi, pi) within tol.
bool f_converged(const std::array<double, 3>& p, double tol);
bool g_converged(const std::array<double, 3>& p, double tol);
bool h_converged(double alpha, double beta, double tol);

// Repeated application with early stop on the limit criterion.  For f and g
// the orbit is truncated (not thrown) when the sum of sines of the current
// state drops below the single-step floor; `converged` always reflects the
// criterion on the last recorded state.  For h the closed-form step stays
// finite through the degenerate limit, so only the criterion, the iteration
// cap, or a non-finite value stops the orbit.
Orbit iterate(const InteriorTriple& start,
              std::size_t max_iters = kDefaultMaxIters,
              double tol = kDefaultTolF);
Orbit iterate(const ExteriorTriple& start,
              std::size_t max_iters = kDefaultMaxIters,
              double tol = kDefaultTolG);
Orbit iterate(const ICQuadrangle& start,
              std::size_t max_iters = kDefaultMaxIters,
              double tol = kDefaultTolH);

// Central-difference Jacobian of the map in chart coordinates; for f and g
// the chart is (first, second) component with the third eliminated by the
// sum constraint, for h it is the obtuse pair itself.  step must lie in
// [1e-8, 1e-3].
Mat2 jacobian_at(const InteriorTriple& p, double step = 1e-6);
Mat2 jacobian_at(const ExteriorTriple& p, double step = 1e-6);
Mat2 jacobian_at(const ICQuadrangle& p, double step = 1e-6);

// Verifies the point is fixed to 1e-9 (else NotAFixedPoint), then reports
// the chart Jacobian, its eigenvalues, and the stability class: attracting
// below spectral radius 1 - 1e-6, repelling above 1 + 1e-6, neutral
// between.
StabilityReport classify_fixed_point(const InteriorTriple& p);
StabilityReport classify_fixed_point(const ExteriorTriple& p);
StabilityReport classify_fixed_point(const ICQuadrangle& p);

}  // namespace tridyn
