#include "tridyn/barycentric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "tridyn/triple.hpp"

namespace tridyn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;
constexpr double kTieTol = 1e-12;

void check_segment_t(double t, bool& first_branch) {
    if (!(t > 0.0) || !(t < kTwoThirdsPi)) {
        throw OutOfRange("segment parameter must lie in (0, 2*pi/3)");
    }
    first_branch = t <= kPi / 2.0;
}

}  // namespace

BaryPoint::BaryPoint(double a, double b, double c) : c_{a, b, c} {
    for (double x : c_) {
        if (!std::isfinite(x)) {
            throw InvalidTriple("non-finite barycentric coordinate");
        }
    }
    double sum = c_[0] + c_[1] + c_[2];
    double dev = std::fabs(sum - kTwoPi);
    if (dev > kSumExact) {
        if (dev > kSumRenorm) {
            throw InvalidTriple("barycentric coordinates must sum to 2*pi");
        }
        for (double& x : c_) x = x / sum * kTwoPi;
    }
    for (double& x : c_) {
        // Snap roundoff-level overshoot onto the closed range [0, pi].
        if (x < 0.0 && x >= -kTieTol) x = 0.0;
        if (x > kPi && x <= kPi + kTieTol) x = kPi;
        if (x < 0.0 || x > kPi) {
            throw InvalidTriple(
                "barycentric coordinate outside the medial triangle");
        }
    }
}

std::string Region::ordering() const {
    const char labels[3] = {'a', 'b', 'c'};
    std::string s;
    s += labels[ascending[0]];
    s += '<';
    s += labels[ascending[1]];
    s += '<';
    s += labels[ascending[2]];
    return s;
}

std::string Region::triangle_name() const {
    // Sub-triangle labels keyed by the ascending index pattern; A1/B1/C1
    // are the medial vertices, A2/B2/C2 the opposite edge midpoints, O the
    // center.
    static const std::map<std::array<int, 3>, std::string> names = {
        {{0, 1, 2}, "A1OC2"}, {{2, 1, 0}, "A2OC1"}, {{1, 2, 0}, "A2OB1"},
        {{0, 2, 1}, "A1OB2"}, {{1, 0, 2}, "B1OC2"}, {{2, 0, 1}, "B2OC1"},
    };
    return names.at(ascending);
}

std::vector<NamedPoint> segment_points(double t) {
    bool first_branch;
    check_segment_t(t, first_branch);
    if (first_branch) {
        return {{'D', BaryPoint(t, kPi - t, kPi)},
                {'E', BaryPoint(t, kPi, kPi - t)},
                {'F', BaryPoint(t, kPi - t / 2.0, kPi - t / 2.0)}};
    }
    return {{'K', BaryPoint(t, t, kTwoPi - 2.0 * t)},
            {'L', BaryPoint(t, kTwoPi - 2.0 * t, t)},
            {'M', BaryPoint(t, kPi - t / 2.0, kPi - t / 2.0)}};
}

std::vector<NamedPoint> image_points(double t) {
    bool first_branch;
    check_segment_t(t, first_branch);
    if (first_branch) {
        double s = detail::s_of_t(t);
        return {{'G', BaryPoint(2.0 * s, kPi - s, kPi - s)}};
    }
    double c = std::cos(t);
    double p1 = kPi / (1.0 - c);
    double p3 = -2.0 * kPi * c / (1.0 - c);
    double s = detail::s_of_t(t);
    return {{'P', BaryPoint(p1, p1, p3)},
            {'Q', BaryPoint(p1, p3, p1)},
            {'N', BaryPoint(2.0 * s, kPi - s, kPi - s)}};
}

double gg(double t) {
    if (!(t >= 0.0) || !(t <= kTwoThirdsPi)) {
        throw OutOfRange("gg is defined on [0, 2*pi/3]");
    }
    double s = detail::s_of_t(t);
    double cs = std::cos(s);
    return kTwoPi * cs / (cs + 1.0);
}

double gg_derivative(double t) {
    if (!(t >= 0.0) || !(t <= kTwoThirdsPi)) {
        throw OutOfRange("gg_derivative is defined on [0, 2*pi/3]");
    }
    double s = detail::s_of_t(t);
    double cs = std::cos(s);
    double ch = std::cos(t / 2.0);
    double outer = 2.0 * kPi * std::sin(s) / ((1.0 + cs) * (1.0 + cs));
    double inner = (kPi / 2.0) * std::sin(t / 2.0) / ((1.0 + ch) * (1.0 + ch));
    return outer * inner;
}

double convexity_bracket(double t) {
    if (!(t > 0.0) || !(t < kTwoThirdsPi)) {
        throw OutOfRange("convexity_bracket is defined on (0, 2*pi/3)");
    }
    double s = detail::s_of_t(t);
    double cs = std::cos(s);
    double ch = std::cos(t / 2.0);
    return -kPi * (2.0 - cs) * (1.0 - ch) +
           std::sin(s) * (2.0 - ch) * (1.0 + ch);
}

double boundary_first_coordinate(BoundaryCurve name, double t) {
    if (name == BoundaryCurve::U) {
        if (!(t > 0.0) || !(t <= kPi / 2.0)) {
            throw OutOfRange("U is defined on (0, pi/2]");
        }
        return (kPi / 2.0) * (1.0 - std::cos(t));
    }
    if (!(t > kPi / 2.0) || !(t <= kTwoThirdsPi)) {
        throw OutOfRange("X is defined on (pi/2, 2*pi/3]");
    }
    double inner = kPi / (1.0 - std::cos(t));
    return kPi / (1.0 - std::cos(inner));
}

Region region_of(const BaryPoint& p) {
    for (double x : p.coords()) {
        if (x < kTieTol || x > kPi - kTieTol) {
            throw OnBoundary("point lies on the medial triangle boundary");
        }
    }
    return detail::region_of_raw(p.coords());
}

Region region_image(const Region& r) {
    return Region{{r.ascending[2], r.ascending[1], r.ascending[0]}};
}

CurveSeries sample_curve(CurveName name, double t0, double t1, int n) {
    if (n < 2) throw OutOfRange("sample_curve needs n >= 2");
    if (!(t0 < t1)) throw OutOfRange("sample_curve needs t0 < t1");

    double lo, hi;
    bool open_lo;
    switch (name) {
        case CurveName::GG:
            lo = 0.0;
            hi = kTwoThirdsPi;
            open_lo = false;
            break;
        case CurveName::U_first:
        case CurveName::W_first:
            lo = 0.0;
            hi = kPi / 2.0;
            open_lo = true;
            break;
        default:  // X_first, Z_first
            lo = kPi / 2.0;
            hi = kTwoThirdsPi;
            open_lo = true;
            break;
    }
    if (t0 < lo || (open_lo && t0 <= lo) || t1 > hi) {
        throw OutOfRange("sample range outside the curve domain");
    }

    auto eval = [&](double t) {
        switch (name) {
            case CurveName::U_first:
                return boundary_first_coordinate(BoundaryCurve::U, t);
            case CurveName::X_first:
                return boundary_first_coordinate(BoundaryCurve::X, t);
            default:
                return gg(t);
        }
    };

    CurveSeries series;
    series.name = name;
    series.samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Hit both endpoints exactly; uniform spacing in between.
        double t = (i == n - 1)
                       ? t1
                       : t0 + (t1 - t0) * static_cast<double>(i) /
                                 static_cast<double>(n - 1);
        series.samples.push_back({t, eval(t)});
    }
    return series;
}

std::string curve_name_str(CurveName name) {
    switch (name) {
        case CurveName::GG: return "GG";
        case CurveName::U_first: return "U_first";
        case CurveName::W_first: return "W_first";
        case CurveName::X_first: return "X_first";
        case CurveName::Z_first: return "Z_first";
    }
    return "?";
}

namespace detail {

double s_of_t(double t) {
    double c = std::cos(t / 2.0);
    return kPi * c / (c + 1.0);
}

Region region_of_raw(const std::array<double, 3>& v) {
    if (std::fabs(v[0] - v[1]) < kTieTol || std::fabs(v[1] - v[2]) < kTieTol ||
        std::fabs(v[0] - v[2]) < kTieTol) {
        throw OnBoundary("coordinates tie on a median line");
    }
    Region r{{0, 1, 2}};
    std::sort(r.ascending.begin(), r.ascending.end(),
              [&](int i, int j) { return v[i] < v[j]; });
    return r;
}

}  // namespace detail

}  // namespace tridyn
