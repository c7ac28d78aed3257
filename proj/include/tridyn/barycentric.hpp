#pragma once

// Barycentric view of exterior-angle space: coordinates (a, b, c) with
// a + b + c = 2*pi live in the closed medial triangle spanned by
// (0,pi,pi), (pi,0,pi), (pi,pi,0).  The median lines a=b, b=c, a=c cut it
// into six order-regions that the second map permutes by reversing the
// coordinate ordering.  Closed forms are provided for the distinguished
// segments at first coordinate t, their images, the double-application
// first-coordinate function gg, and the region-boundary curves.

#include <array>
#include <string>
#include <vector>

#include "tridyn/error.hpp"

namespace tridyn {

class BaryPoint {
  public:
    BaryPoint(double a, double b, double c);
    explicit BaryPoint(const std::array<double, 3>& v)
        : BaryPoint(v[0], v[1], v[2]) {}

    const std::array<double, 3>& coords() const { return c_; }
    double operator[](std::size_t i) const { return c_[i]; }

  private:
    std::array<double, 3> c_;
};

// One of the six strict coordinate orderings, stored as the coordinate
// indices in ascending value order; e.g. {0,1,2} means a < b < c.
struct Region {
    std::array<int, 3> ascending;

    // Ordering pattern such as "a<b<c".
    std::string ordering() const;
    // Conventional label of the corresponding sub-triangle (A1OC2, ...).
    std::string triangle_name() const;

    friend bool operator==(const Region&, const Region&) = default;
};

enum class CurveName { GG, U_first, W_first, X_first, Z_first };

struct CurveSeries {
    CurveName name;
    std::vector<std::array<double, 2>> samples;  // (t, value), t increasing
};

struct NamedPoint {
    char name;  // one of D,E,F (segments), K,L,M (second branch), G,P,Q,N
    BaryPoint point;
};

// Distinguished points of the segment at first coordinate t:
// D,E,F for 0 < t <= pi/2; K,L,M for pi/2 < t < 2*pi/3.
std::vector<NamedPoint> segment_points(double t);

// Closed-form images of the segment points under the exterior-angle map:
// G (first branch) or P,Q,N (second branch).
std::vector<NamedPoint> image_points(double t);

// First coordinate of the twice-mapped midpoint as a function of t, defined
// on [0, 2*pi/3]; fixed endpoints gg(0) = 0 and gg(2*pi/3) = 2*pi/3.
double gg(double t);

// Closed-form derivative of gg; zero at t = 0, (2*pi/(3*sqrt(3)))^2 at the
// right endpoint.
double gg_derivative(double t);

// The bracket expression whose sign tracks the convexity of gg, defined on
// the open interval (0, 2*pi/3); tends to 2 as t -> 0.
double convexity_bracket(double t);

enum class BoundaryCurve { U, X };

// First coordinate of the region-boundary arc endpoints:
// U on 0 < t <= pi/2, X on pi/2 < t <= 2*pi/3.
double boundary_first_coordinate(BoundaryCurve name, double t);

// Ordering pattern of a point strictly inside the medial triangle; throws
// OnBoundary when two coordinates tie within 1e-12 or a coordinate sits on
// the triangle boundary itself.
Region region_of(const BaryPoint& p);

// The paired region under the map: the reversed ordering.
Region region_image(const Region& r);

// n >= 2 uniform samples of the named curve over [t0, t1], endpoints
// included; the range must lie in the curve's domain.
CurveSeries sample_curve(CurveName name, double t0, double t1, int n);

std::string curve_name_str(CurveName name);

namespace detail {
// s(t) = pi*cos(t/2)/(cos(t/2)+1), the first-application parameter.
double s_of_t(double t);
// Ordering region of a raw coordinate array (no domain validation beyond
// the tie check).
Region region_of_raw(const std::array<double, 3>& v);
}  // namespace detail

}  // namespace tridyn
