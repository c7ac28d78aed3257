#include "tridyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tridyn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::array<double, 3> kEquilateralInterior = {kPi / 3.0, kPi / 3.0,
                                                    kPi / 3.0};

// One raw scaled-sine step; returns false (leaving `out` untouched) when
// the sum of sines is below the floor.
bool sine_step(const std::array<double, 3>& p, double total,
               std::array<double, 3>& out) {
    std::array<double, 3> s = {std::sin(p[0]), std::sin(p[1]),
                               std::sin(p[2])};
    double tot = s[0] + s[1] + s[2];
    if (tot < kSineSumFloor) return false;
    out = {total * s[0] / tot, total * s[1] / tot, total * s[2] / tot};
    return true;
}

Orbit iterate_triple(MapId id, const std::array<double, 3>& start,
                     std::size_t max_iters, double tol) {
    if (max_iters < 1) throw OutOfRange("max_iters must be >= 1");
    if (!(tol > 0.0)) throw OutOfRange("tol must be positive");

    const double total = (id == MapId::f) ? kPi : kTwoPi;
    const LimitId limit =
        (id == MapId::f) ? LimitId::equilateral : LimitId::degenerate_triangle;
    auto converged_at = [&](const std::array<double, 3>& p) {
        return (id == MapId::f) ? f_converged(p, tol) : g_converged(p, tol);
    };

    Orbit orbit;
    orbit.map_id = id;
    orbit.states.push_back(start);
    orbit.converged = converged_at(start);
    while (!orbit.converged && orbit.states.size() <= max_iters) {
        std::array<double, 3> next;
        if (!sine_step(orbit.states.back(), total, next)) break;
        orbit.states.push_back(next);
        orbit.converged = converged_at(next);
    }
    orbit.limit_id = orbit.converged ? limit : LimitId::none;
    orbit.iterations_used = orbit.states.size() - 1;
    return orbit;
}

void check_step(double step) {
    if (!(step >= 1e-8) || !(step <= 1e-3)) {
        throw OutOfRange("finite-difference step must lie in [1e-8, 1e-3]");
    }
}

// Chart map for f/g: (x, y) -> first two output components with the third
// input eliminated by the sum constraint.
std::array<double, 2> chart_sine_map(double x, double y, double total) {
    double z = total - x - y;
    if (!(x > 0.0) || !(y > 0.0) || !(z > 0.0) || !(x < kPi) || !(y < kPi) ||
        !(z < kPi)) {
        throw DegenerateInput("chart probe left the valid domain");
    }
    std::array<double, 3> out;
    if (!sine_step({x, y, z}, total, out)) {
        throw DegenerateInput("sum of sines below 1e-12 at chart probe");
    }
    return {out[0], out[1]};
}

template <typename Fn>
Mat2 central_jacobian(Fn&& chart, double x, double y, double step) {
    auto xp = chart(x + step, y);
    auto xm = chart(x - step, y);
    auto yp = chart(x, y + step);
    auto ym = chart(x, y - step);
    return {{{(xp[0] - xm[0]) / (2.0 * step), (yp[0] - ym[0]) / (2.0 * step)},
             {(xp[1] - xm[1]) / (2.0 * step),
              (yp[1] - ym[1]) / (2.0 * step)}}};
}

std::array<std::complex<double>, 2> eigen2(const Mat2& m) {
    double tr = m[0][0] + m[1][1];
    double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    double disc = tr * tr - 4.0 * det;
    if (disc >= 0.0) {
        double r = std::sqrt(disc);
        return {std::complex<double>((tr + r) / 2.0, 0.0),
                std::complex<double>((tr - r) / 2.0, 0.0)};
    }
    double im = std::sqrt(-disc) / 2.0;
    return {std::complex<double>(tr / 2.0, im),
            std::complex<double>(tr / 2.0, -im)};
}

StabilityReport report_from(MapId id, const std::array<double, 3>& point,
                            const Mat2& jac) {
    StabilityReport rep;
    rep.map_id = id;
    rep.fixed_point = point;
    rep.jacobian = jac;
    rep.eigenvalues = eigen2(jac);
    rep.spectral_radius =
        std::max(std::abs(rep.eigenvalues[0]), std::abs(rep.eigenvalues[1]));
    if (rep.spectral_radius < 1.0 - 1e-6) {
        rep.classification = Stability::attracting;
    } else if (rep.spectral_radius > 1.0 + 1e-6) {
        rep.classification = Stability::repelling;
    } else {
        rep.classification = Stability::neutral;
    }
    return rep;
}

constexpr double kFixedPointResidual = 1e-9;

}  // namespace

bool f_converged(const std::array<double, 3>& p, double tol) {
    return quotient_distance_raw(p, kEquilateralInterior) < tol;
}

bool g_converged(const std::array<double, 3>& p, double tol) {
    std::array<double, 3> ints = {kPi - p[0], kPi - p[1], kPi - p[2]};
    std::sort(ints.begin(), ints.end());
    return std::fabs(ints[0]) <= tol && std::fabs(ints[1]) <= tol &&
           std::fabs(ints[2] - kPi) <= tol;
}

bool h_converged(double alpha, double beta, double tol) {
    return std::hypot(kPi - alpha, kPi - beta) <= tol;
}

Orbit iterate(const InteriorTriple& start, std::size_t max_iters,
              double tol) {
    return iterate_triple(MapId::f, start.angles(), max_iters, tol);
}

Orbit iterate(const ExteriorTriple& start, std::size_t max_iters,
              double tol) {
    return iterate_triple(MapId::g, start.angles(), max_iters, tol);
}

Orbit iterate(const ICQuadrangle& start, std::size_t max_iters, double tol) {
    if (max_iters < 1) throw OutOfRange("max_iters must be >= 1");
    if (!(tol > 0.0)) throw OutOfRange("tol must be positive");

    Orbit orbit;
    orbit.map_id = MapId::h;
    double a = start.alpha();
    double b = start.beta();
    orbit.states.push_back({a, b, 0.0});
    orbit.converged = h_converged(a, b, tol);
    while (!orbit.converged && orbit.states.size() <= max_iters) {
        auto [cd, bc] = detail::h_edges_raw(a, b);
        double na = std::max(cd, bc);
        double nb = std::min(cd, bc);
        if (!std::isfinite(na) || !std::isfinite(nb)) break;
        a = na;
        b = nb;
        orbit.states.push_back({a, b, 0.0});
        orbit.converged = h_converged(a, b, tol);
    }
    orbit.limit_id =
        orbit.converged ? LimitId::degenerate_quadrangle : LimitId::none;
    orbit.iterations_used = orbit.states.size() - 1;
    return orbit;
}

Mat2 jacobian_at(const InteriorTriple& p, double step) {
    check_step(step);
    auto chart = [](double x, double y) { return chart_sine_map(x, y, kPi); };
    return central_jacobian(chart, p[0], p[1], step);
}

Mat2 jacobian_at(const ExteriorTriple& p, double step) {
    check_step(step);
    auto chart = [](double x, double y) {
        return chart_sine_map(x, y, kTwoPi);
    };
    return central_jacobian(chart, p[0], p[1], step);
}

Mat2 jacobian_at(const ICQuadrangle& p, double step) {
    check_step(step);
    // Raw edge formulas, not the sorted pair: sorting is a relabelling that
    // would put a kink at symmetric points and spoil the differences.
    auto chart = [](double x, double y) { return detail::h_edges_raw(x, y); };
    return central_jacobian(chart, p.alpha(), p.beta(), step);
}

StabilityReport classify_fixed_point(const InteriorTriple& p) {
    InteriorTriple image = map_f(p);
    double res = std::sqrt(std::pow(image[0] - p[0], 2) +
                           std::pow(image[1] - p[1], 2) +
                           std::pow(image[2] - p[2], 2));
    if (res > kFixedPointResidual) {
        throw NotAFixedPoint("map_f moves the point by " +
                             std::to_string(res));
    }
    return report_from(MapId::f, p.angles(), jacobian_at(p));
}

StabilityReport classify_fixed_point(const ExteriorTriple& p) {
    ExteriorTriple image = map_g(p);
    double res = std::sqrt(std::pow(image[0] - p[0], 2) +
                           std::pow(image[1] - p[1], 2) +
                           std::pow(image[2] - p[2], 2));
    if (res > kFixedPointResidual) {
        throw NotAFixedPoint("map_g moves the point by " +
                             std::to_string(res));
    }
    return report_from(MapId::g, p.angles(), jacobian_at(p));
}

StabilityReport classify_fixed_point(const ICQuadrangle& p) {
    auto [cd, bc] = detail::h_edges_raw(p.alpha(), p.beta());
    double res = std::hypot(std::max(cd, bc) - p.alpha(),
                            std::min(cd, bc) - p.beta());
    if (res > kFixedPointResidual) {
        throw NotAFixedPoint("map_h moves the point by " +
                             std::to_string(res));
    }
    return report_from(MapId::h, {p.alpha(), p.beta(), 0.0},
                       jacobian_at(p));
}

}  // namespace tridyn
