#pragma once

// Quadrangles that are simultaneously inscribed in one circle and
// circumscribed about another.  Such a quadrangle is determined up to
// similarity by its two obtuse angles (alpha >= beta); opposite angles sum
// to pi.  map_h rescales the quadrangle to perimeter 2*pi and reads the two
// longest edges back as the next obtuse pair.

#include <array>

#include "tridyn/error.hpp"

namespace tridyn {

enum class EdgeMode { unit_inradius, perimeter_2pi };

// Obtuse-angle pair with pi/2 <= beta <= alpha < pi.  The square
// (alpha = beta = pi/2) is admitted so the fixed point of map_h is
// representable; values within 1e-12 below pi/2 (or with beta above alpha
// by at most 1e-12) are clamped onto the boundary.
class ICQuadrangle {
  public:
    ICQuadrangle(double alpha, double beta);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

  private:
    double alpha_;
    double beta_;
};

// Edge lengths in the descending perimeter order cd >= bc >= ab >= da.
// In perimeter_2pi mode the adjacent sums cd+da and bc+ab both equal pi.
struct QuadEdges {
    double cd;
    double bc;
    double ab;
    double da;
    EdgeMode mode;
};

QuadEdges quad_edges(const ICQuadrangle& q, EdgeMode mode);

ICQuadrangle map_h(const ICQuadrangle& q);

double obtuse_sum(const ICQuadrangle& q);

namespace detail {
// Longest two perimeter-2*pi edges for the pair (a, b); no validation.
// Exactly the quantities map_h reads back as the next obtuse pair.
std::array<double, 2> h_edges_raw(double a, double b);
}  // namespace detail

}  // namespace tridyn
