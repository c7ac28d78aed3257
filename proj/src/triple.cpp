#include "tridyn/triple.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace tridyn {

namespace {

constexpr double kPi = std::numbers::pi;

std::string triple_str(const std::array<double, 3>& a) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << a[0] << ", " << a[1] << ", " << a[2] << ")";
    return os.str();
}

}  // namespace

namespace detail {

std::array<double, 3> checked_triple(std::array<double, 3> a, double target) {
    for (double x : a) {
        if (!std::isfinite(x)) {
            throw InvalidTriple("non-finite component in " + triple_str(a));
        }
    }
    double sum = a[0] + a[1] + a[2];
    double dev = std::fabs(sum - target);
    if (dev > kSumExact) {
        if (dev > kSumRenorm) {
            throw InvalidTriple("component sum " + std::to_string(sum) +
                                " too far from required " +
                                std::to_string(target));
        }
        for (double& x : a) x = x / sum * target;
    }
    for (double x : a) {
        if (!(x > 0.0) || !(x < kPi)) {
            throw InvalidTriple("component out of (0, pi) in " +
                                triple_str(a));
        }
    }
    return a;
}

std::array<double, 3> lex_min_rotation(const std::array<double, 3>& v) {
    std::array<double, 3> best = v;
    for (int r = 1; r < 3; ++r) {
        std::array<double, 3> rot = {v[r], v[(r + 1) % 3], v[(r + 2) % 3]};
        if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(),
                                         best.end())) {
            best = rot;
        }
    }
    return best;
}

}  // namespace detail

InteriorTriple::InteriorTriple(double a, double b, double c)
    : a_(detail::checked_triple({a, b, c}, kPi)) {}

ExteriorTriple::ExteriorTriple(double a, double b, double c)
    : a_(detail::checked_triple({a, b, c}, 2.0 * kPi)) {}

CanonicalTriple::CanonicalTriple(const InteriorTriple& t)
    : kind_(TripleKind::interior),
      rep_(detail::lex_min_rotation(t.angles())) {}

CanonicalTriple::CanonicalTriple(const ExteriorTriple& t)
    : kind_(TripleKind::exterior),
      rep_(detail::lex_min_rotation(t.angles())) {}

ExteriorTriple interior_to_exterior(const InteriorTriple& t) {
    return ExteriorTriple(kPi - t[0], kPi - t[1], kPi - t[2]);
}

InteriorTriple exterior_to_interior(const ExteriorTriple& t) {
    return InteriorTriple(kPi - t[0], kPi - t[1], kPi - t[2]);
}

CanonicalTriple normalize_cyclic(const std::array<double, 3>& t) {
    double sum = t[0] + t[1] + t[2];
    if (std::fabs(sum - kPi) <= kSumRenorm) {
        return CanonicalTriple(InteriorTriple(t));
    }
    if (std::fabs(sum - 2.0 * kPi) <= kSumRenorm) {
        return CanonicalTriple(ExteriorTriple(t));
    }
    throw InvalidTriple("component sum " + std::to_string(sum) +
                        " matches neither pi nor 2*pi");
}

double quotient_distance_raw(const std::array<double, 3>& p,
                             const std::array<double, 3>& q) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < 3; ++r) {
        double acc = 0.0;
        for (int i = 0; i < 3; ++i) {
            double d = p[(i + r) % 3] - q[i];
            acc += d * d;
        }
        best = std::min(best, std::sqrt(acc));
    }
    return best;
}

double quotient_distance(const CanonicalTriple& p, const CanonicalTriple& q) {
    if (p.kind() != q.kind()) {
        throw KindMismatch(
            "cannot compare an interior triple with an exterior one");
    }
    return quotient_distance_raw(p.representative(), q.representative());
}

double quotient_distance(const InteriorTriple& p, const InteriorTriple& q) {
    return quotient_distance_raw(p.angles(), q.angles());
}

double quotient_distance(const ExteriorTriple& p, const ExteriorTriple& q) {
    return quotient_distance_raw(p.angles(), q.angles());
}

std::array<double, 3> edges_by_construction(const InteriorTriple& t,
                                            double perimeter) {
    if (!(perimeter > 0.0) || !std::isfinite(perimeter)) {
        throw OutOfRange("perimeter must be positive and finite");
    }
    std::array<double, 3> side;
    for (int i = 0; i < 3; ++i) {
        double s = std::sin(t[i]);
        if (s < 1e-12) {
            throw DegenerateInput("angle too close to 0 or pi for edge "
                                  "construction");
        }
        side[i] = 2.0 * s;  // chord of the unit circumcircle
    }
    double tot = side[0] + side[1] + side[2];
    double scale = perimeter / tot;
    return {side[0] * scale, side[1] * scale, side[2] * scale};
}

}  // namespace tridyn
