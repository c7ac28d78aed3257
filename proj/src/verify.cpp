#include "tridyn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "tridyn/barycentric.hpp"
#include "tridyn/dynamics.hpp"
#include "tridyn/maps.hpp"
#include "tridyn/quadrangle.hpp"
#include "tridyn/rng.hpp"
#include "tridyn/triple.hpp"

namespace tridyn::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;

std::string num(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

CheckResult make(const std::string& suite, const std::string& name,
                 bool passed, const std::string& detail) {
    return {suite, name, passed, detail};
}

// ---------------------------------------------------------------- lemmas

CheckResult check_f_min_max_monotonic(int samples, std::uint64_t seed) {
    Lcg64 rng(seed);
    const std::array<double, 3> eq = {kPi / 3.0, kPi / 3.0, kPi / 3.0};
    int viol = 0;
    for (int i = 0; i < samples; ++i) {
        InteriorTriple p = sample_interior(rng);
        InteriorTriple q = map_f(p);
        const auto& pa = p.angles();
        const auto& qa = q.angles();
        double pmin = std::min({pa[0], pa[1], pa[2]});
        double pmax = std::max({pa[0], pa[1], pa[2]});
        double qmin = std::min({qa[0], qa[1], qa[2]});
        double qmax = std::max({qa[0], qa[1], qa[2]});
        if (qmin < pmin - 1e-15 || qmax > pmax + 1e-15) ++viol;
        if (quotient_distance_raw(pa, eq) >= 1e-6 &&
            !(qmin > pmin && qmax < pmax)) {
            ++viol;
        }
    }
    return make("lemmas", "f_min_max_monotonic", viol == 0,
                std::to_string(viol) + " violations in " +
                    std::to_string(samples) + " samples");
}

CheckResult check_f_matches_edge_oracle(int samples, std::uint64_t seed) {
    Lcg64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        InteriorTriple p = sample_interior(rng);
        InteriorTriple viaf = map_f(p);
        auto edges = edges_by_construction(p, kPi);
        for (int k = 0; k < 3; ++k) {
            worst = std::max(worst, std::fabs(viaf[k] - edges[k]));
        }
    }
    return make("lemmas", "f_matches_edge_oracle", worst < 1e-10,
                "worst deviation " + num(worst) + " over " +
                    std::to_string(samples) + " samples (gate 1e-10)");
}

// Raw one-step image used where typed validation would reject boundary
// points (coordinates exactly pi).
std::array<double, 3> g_raw(const std::array<double, 3>& p) {
    std::array<double, 3> s = {std::sin(p[0]), std::sin(p[1]),
                               std::sin(p[2])};
    double tot = s[0] + s[1] + s[2];
    return {kTwoPi * s[0] / tot, kTwoPi * s[1] / tot, kTwoPi * s[2] / tot};
}

CheckResult check_closed_form_images() {
    double worst = 0.0;
    const int n = 400;
    for (int i = 1; i <= n; ++i) {
        double t = kTwoThirdsPi * static_cast<double>(i) /
                   static_cast<double>(n + 1);
        auto segs = segment_points(t);
        auto imgs = image_points(t);
        for (std::size_t k = 0; k < imgs.size(); ++k) {
            // Branch layouts pair F->G and K,L,M->P,Q,N positionally.
            const BaryPoint& pre =
                segs[imgs.size() == 1 ? 2 : k].point;
            auto direct = g_raw(pre.coords());
            for (int c = 0; c < 3; ++c) {
                worst = std::max(
                    worst, std::fabs(direct[c] - imgs[k].point[c]));
            }
        }
    }
    return make("lemmas", "closed_form_images_match_map", worst < 1e-10,
                "worst deviation " + num(worst) +
                    " over 400 parameters (gate 1e-10)");
}

CheckResult check_gg_vs_double_application() {
    double worst = 0.0;
    const int n = 400;
    for (int i = 1; i <= n; ++i) {
        double t = kTwoThirdsPi * static_cast<double>(i) /
                   static_cast<double>(n + 1);
        std::array<double, 3> mid = {t, kPi - t / 2.0, kPi - t / 2.0};
        double direct = g_raw(g_raw(mid))[0];
        worst = std::max(worst, std::fabs(direct - gg(t)));
    }
    return make("lemmas", "gg_matches_double_application", worst < 1e-10,
                "worst deviation " + num(worst) + " (gate 1e-10)");
}

CheckResult check_stability_multipliers() {
    auto f_rep = classify_fixed_point(
        InteriorTriple(kPi / 3.0, kPi / 3.0, kPi / 3.0));
    auto g_rep = classify_fixed_point(
        ExteriorTriple(kTwoThirdsPi, kTwoThirdsPi, kTwoThirdsPi));
    auto h_rep = classify_fixed_point(ICQuadrangle(kPi / 2.0, kPi / 2.0));
    double f_target = kPi / (3.0 * std::sqrt(3.0));
    double g_target = kTwoPi / (3.0 * std::sqrt(3.0));
    double h_target = kPi / (2.0 * std::sqrt(2.0));
    double gg_target = g_target * g_target;
    double e_f = std::fabs(f_rep.spectral_radius - f_target);
    double e_g = std::fabs(g_rep.spectral_radius - g_target);
    double e_h = std::fabs(h_rep.spectral_radius - h_target);
    double e_gg = std::fabs(gg_derivative(kTwoThirdsPi) - gg_target);
    bool ok = e_f < 1e-5 && e_g < 1e-5 && e_h < 1e-5 && e_gg < 1e-6 &&
              f_rep.classification == Stability::attracting &&
              g_rep.classification == Stability::repelling &&
              h_rep.classification == Stability::repelling;
    return make("lemmas", "stability_multipliers", ok,
                "radius errors f " + num(e_f) + ", g " + num(e_g) + ", h " +
                    num(e_h) + ", gg' " + num(e_gg));
}

CheckResult check_gg_diagonal_increasing() {
    const int m = 10000;
    double h = kTwoThirdsPi / static_cast<double>(m + 1);
    double prev = gg(h);
    double min_gap = kPi;
    double min_step = kPi;
    for (int i = 1; i < m; ++i) {
        double t = static_cast<double>(i + 1) * h;
        double v = gg(t);
        min_gap = std::min(min_gap, t - v);
        min_step = std::min(min_step, v - prev);
        prev = v;
    }
    // Include the first grid point's diagonal gap.
    min_gap = std::min(min_gap, h - gg(h));
    bool ok = min_gap > 0.0 && min_step > 0.0;
    return make("lemmas", "gg_below_diagonal_increasing", ok,
                "min(t-gg) " + num(min_gap) + ", min increment " +
                    num(min_step));
}

CheckResult check_gg_second_differences() {
    const int m = 10000;
    double h = kTwoThirdsPi / static_cast<double>(m + 1);
    std::vector<double> vals(m);
    for (int i = 0; i < m; ++i) {
        vals[i] = gg(static_cast<double>(i + 1) * h);
    }
    int below = 0;
    double worst = 0.0;
    for (int i = 0; i + 2 < m; ++i) {
        double d2 = vals[i] - 2.0 * vals[i + 1] + vals[i + 2];
        worst = std::min(worst, d2);
        if (d2 < -1e-9) ++below;
    }
    return make("lemmas", "gg_second_differences", below == 0,
                std::to_string(below) + "/" + std::to_string(m - 2) +
                    " below -1e-9, min " + num(worst) +
                    " (real concavity near the right endpoint)");
}

CheckResult check_bracket_positive() {
    const int m = 10000;
    double h = kTwoThirdsPi / static_cast<double>(m + 1);
    int nonpos = 0;
    double first_bad = -1.0;
    for (int i = 0; i < m; ++i) {
        double t = static_cast<double>(i + 1) * h;
        if (convexity_bracket(t) <= 0.0) {
            if (nonpos == 0) first_bad = t;
            ++nonpos;
        }
    }
    return make("lemmas", "convexity_bracket_positive", nonpos == 0,
                std::to_string(nonpos) + "/" + std::to_string(m) +
                    " grid points non-positive" +
                    (nonpos ? ", first at t=" + num(first_bad) : ""));
}

CheckResult check_bracket_convexity_consistency() {
    const int m = 10000;
    double h = kTwoThirdsPi / static_cast<double>(m + 1);
    std::vector<double> vals(m);
    for (int i = 0; i < m; ++i) {
        vals[i] = gg(static_cast<double>(i + 1) * h);
    }
    int viol = 0;
    for (int i = 0; i + 2 < m; ++i) {
        double t = static_cast<double>(i + 2) * h;
        double d2 = vals[i] - 2.0 * vals[i + 1] + vals[i + 2];
        if (convexity_bracket(t) > 0.0 && !(d2 > 0.0)) ++viol;
    }
    return make("lemmas", "bracket_convexity_consistency", viol == 0,
                std::to_string(viol) +
                    " positive-bracket points with non-positive second "
                    "difference");
}

CheckResult check_boundary_inequalities() {
    const int n = 10000;
    double min_tu = kPi, min_uw = kPi, min_tx = kPi, min_xz = kPi;
    for (int i = 1; i < n; ++i) {
        double t = (kPi / 2.0) * static_cast<double>(i) /
                   static_cast<double>(n);
        double u = boundary_first_coordinate(BoundaryCurve::U, t);
        double w = gg(t);
        min_tu = std::min(min_tu, t - u);
        min_uw = std::min(min_uw, u - w);
    }
    for (int i = 1; i < n; ++i) {
        double t = kPi / 2.0 + (kTwoThirdsPi - kPi / 2.0) *
                                   static_cast<double>(i) /
                                   static_cast<double>(n);
        double x = boundary_first_coordinate(BoundaryCurve::X, t);
        double z = gg(t);
        min_tx = std::min(min_tx, t - x);
        min_xz = std::min(min_xz, x - z);
    }
    bool ok = min_tu > 0.0 && min_uw > 0.0 && min_tx > 0.0 && min_xz >= 0.0;
    return make("lemmas", "boundary_curve_inequalities", ok,
                "min margins t-U " + num(min_tu) + ", U-W " + num(min_uw) +
                    ", t-X " + num(min_tx) + ", X-Z " + num(min_xz));
}

CheckResult check_richardson_u_limit() {
    auto a_of = [](double t, double eps) {
        std::array<double, 3> d = {t, kPi - t, kPi};
        std::array<double, 3> e = {t, kPi, kPi - t};
        std::array<double, 3> q;
        for (int i = 0; i < 3; ++i) q[i] = d[i] + eps * (e[i] - d[i]);
        return g_raw(g_raw(q))[0];
    };
    double worst = 0.0;
    for (double t : {0.3, 0.8, 1.2, kPi / 2.0}) {
        double v0 = a_of(t, 1e-2);
        double v1 = a_of(t, 5e-3);
        double v2 = a_of(t, 2.5e-3);
        double r1 = 2.0 * v1 - v0;
        double r2 = 2.0 * v2 - v1;
        double rr = 2.0 * r2 - r1;
        double target = boundary_first_coordinate(BoundaryCurve::U, t);
        worst = std::max(worst, std::fabs(rr - target));
    }
    return make("lemmas", "u_limit_richardson", worst < 1e-4,
                "worst extrapolation error " + num(worst) + " (gate 1e-4)");
}

// --------------------------------------------------------------- regions

CheckResult check_region_reversal(int samples, std::uint64_t seed) {
    Lcg64 rng(seed);
    auto argsort = [](const std::array<double, 3>& v) {
        std::array<int, 3> idx = {0, 1, 2};
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int i, int j) { return v[i] < v[j]; });
        return idx;
    };
    int tested = 0;
    int viol = 0;
    while (tested < samples) {
        InteriorTriple it = sample_interior(rng);
        std::array<double, 3> p = {kPi - it[0], kPi - it[1], kPi - it[2]};
        double tie = std::min({std::fabs(p[0] - p[1]), std::fabs(p[1] - p[2]),
                               std::fabs(p[0] - p[2])});
        if (tie < 1e-9) continue;
        auto q = g_raw(p);
        ++tested;
        auto op = argsort(p);
        auto oq = argsort(q);
        std::array<int, 3> rev = {op[2], op[1], op[0]};
        if (oq != rev) ++viol;
    }
    return make("regions", "ordering_reversal_under_map", viol == 0,
                std::to_string(viol) + " violations in " +
                    std::to_string(samples) + " samples");
}

CheckResult check_region_pairing_table() {
    // The six patterns must pair up by reversal, and pairing twice must be
    // the identity.
    const std::array<std::array<int, 3>, 6> patterns = {
        {{0, 1, 2}, {2, 1, 0}, {1, 2, 0}, {0, 2, 1}, {1, 0, 2}, {2, 0, 1}}};
    int bad = 0;
    for (const auto& p : patterns) {
        Region r{p};
        Region img = region_image(r);
        if (region_image(img) != r) ++bad;
        if (img.ascending ==
            r.ascending) {  // reversal must move every strict ordering
            ++bad;
        }
    }
    return make("regions", "pairing_involution", bad == 0,
                std::to_string(bad) + " pattern failures");
}

// ------------------------------------------------------------------ quad

// Uniform obtuse grid value: index i of n points on
// [pi/2 + 1e-3, pi - 1e-3].
double obtuse_grid(int i, int n) {
    const double lo = kPi / 2.0 + 1e-3;
    const double hi = kPi - 1e-3;
    return lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(n - 1);
}

CheckResult check_quad_edge_chain() {
    const int n = 200;
    int viol = 0;
    double worst_dev = 0.0;
    for (int i = 0; i < n; ++i) {
        double a = obtuse_grid(i, n);
        for (int j = 0; j <= i; ++j) {
            double b = obtuse_grid(j, n);
            ICQuadrangle q(a, b);
            auto u = quad_edges(q, EdgeMode::unit_inradius);
            if (!(u.cd >= u.bc && u.bc >= u.ab && u.ab >= u.da &&
                  u.da > 0.0)) {
                ++viol;
            }
            auto p = quad_edges(q, EdgeMode::perimeter_2pi);
            // Mode agreement after rescaling the unit edges to total 2*pi.
            double scale = kTwoPi / (u.cd + u.bc + u.ab + u.da);
            worst_dev = std::max(
                {worst_dev, std::fabs(u.cd * scale - p.cd),
                 std::fabs(u.bc * scale - p.bc),
                 std::fabs(u.ab * scale - p.ab),
                 std::fabs(u.da * scale - p.da)});
            // Adjacent sums in perimeter mode.
            worst_dev = std::max({worst_dev, std::fabs(p.cd + p.da - kPi),
                                  std::fabs(p.bc + p.ab - kPi)});
        }
    }
    bool ok = viol == 0 && worst_dev < 1e-12;
    return make("quad", "edge_chain_and_mode_agreement", ok,
                std::to_string(viol) + " chain violations, worst identity "
                                       "deviation " +
                    num(worst_dev));
}

CheckResult check_single_step_sum_decrease() {
    ICQuadrangle q(1.85, 1.75);
    double before = obtuse_sum(q);
    double after = obtuse_sum(map_h(q));
    bool ok = std::fabs(after - 3.58) < 5e-3 && after < before &&
              std::fabs(before - 3.6) < 1e-12;
    return make("quad", "single_step_sum_decrease_witness", ok,
                "sum " + num(before) + " -> " + num(after));
}

CheckResult check_two_step_increase() {
    const int n = 200;
    int viol = 0;
    int total = 0;
    double min_margin = kPi;
    for (int i = 0; i < n; ++i) {
        double a = obtuse_grid(i, n);
        for (int j = 0; j <= i; ++j) {
            double b = obtuse_grid(j, n);
            // Raw pair steps: near the top corner the second image sits
            // inside the degenerate guard band where the typed map_h
            // refuses to construct, but its angle sum is still meaningful.
            auto [cd1, bc1] = detail::h_edges_raw(a, b);
            auto [cd2, bc2] = detail::h_edges_raw(std::max(cd1, bc1),
                                                  std::min(cd1, bc1));
            double s0 = a + b;
            double s2 = cd2 + bc2;
            double margin = s2 - s0;
            min_margin = std::min(min_margin, margin);
            if (!(margin > 0.0)) ++viol;
            ++total;
        }
    }
    return make("quad", "two_step_sum_increase", viol == 0,
                std::to_string(viol) + " violations on " +
                    std::to_string(total) + " grid points, min margin " +
                    num(min_margin));
}

CheckResult check_h_orbits_converge() {
    const int n = 200;
    int fails = 0;
    int total = 0;
    std::size_t worst_iters = 0;
    for (int i = 0; i < n; ++i) {
        double a = obtuse_grid(i, n);
        for (int j = 0; j <= i; ++j) {
            double b = obtuse_grid(j, n);
            Orbit orbit = iterate(ICQuadrangle(a, b));
            if (!orbit.converged) {
                ++fails;
            } else {
                worst_iters = std::max(worst_iters, orbit.iterations_used);
            }
            ++total;
        }
    }
    return make("quad", "orbits_reach_degenerate_pair", fails == 0,
                std::to_string(fails) + " of " + std::to_string(total) +
                    " grid orbits failed, worst iterations " +
                    std::to_string(worst_iters));
}

CheckResult check_square_fixed_point() {
    ICQuadrangle sq(kPi / 2.0, kPi / 2.0);
    ICQuadrangle img = map_h(sq);
    double res = std::hypot(img.alpha() - kPi / 2.0, img.beta() - kPi / 2.0);
    bool ok = res < 1e-12;
    return make("quad", "square_fixed_point", ok,
                "residual " + num(res));
}

// ---------------------------------------------------------------- orbits

CheckResult check_f_orbits(int samples, std::uint64_t seed) {
    Lcg64 rng(seed);
    int fails = 0;
    std::size_t worst = 0;
    for (int i = 0; i < samples; ++i) {
        InteriorTriple start = sample_interior(rng);
        Orbit orbit = iterate(start, 200, 1e-9);
        if (!orbit.converged) {
            ++fails;
        } else {
            worst = std::max(worst, orbit.iterations_used);
        }
    }
    return make("orbits", "f_converges_to_equilateral", fails == 0,
                std::to_string(fails) + " of " + std::to_string(samples) +
                    " failed, worst iterations " + std::to_string(worst));
}

struct GOrbitStats {
    int converged = 0;
    int truncated = 0;
    int mono_viol_pairs = 0;
    int mono_viol_orbits = 0;
    std::size_t worst_iters = 0;
};

GOrbitStats g_orbit_stats(int samples, std::uint64_t seed) {
    Lcg64 rng(seed);
    GOrbitStats st;
    for (int i = 0; i < samples; ++i) {
        ExteriorTriple start = sample_exterior_away_from_center(rng, 0.05);
        Orbit orbit = iterate(start, 10000, 1e-6);
        if (orbit.converged) {
            ++st.converged;
            st.worst_iters = std::max(st.worst_iters, orbit.iterations_used);
        } else {
            ++st.truncated;
        }
        std::vector<double> mins;
        mins.reserve(orbit.states.size());
        for (const auto& s : orbit.states) {
            mins.push_back(std::min({s[0], s[1], s[2]}));
        }
        bool orbit_viol = false;
        for (std::size_t k = 0; k + 2 < mins.size(); k += 2) {
            if (mins[k + 2] >= mins[k]) {
                ++st.mono_viol_pairs;
                orbit_viol = true;
            }
        }
        if (orbit_viol) ++st.mono_viol_orbits;
    }
    return st;
}

CheckResult check_g_orbits_converge(int samples, std::uint64_t seed) {
    GOrbitStats st = g_orbit_stats(samples, seed);
    return make(
        "orbits", "g_converges_to_degenerate", st.converged == samples,
        std::to_string(st.converged) + "/" + std::to_string(samples) +
            " converged, " + std::to_string(st.truncated) +
            " truncated at the sine-sum floor (double-precision limit near "
            "the degenerate edge), worst iterations " +
            std::to_string(st.worst_iters));
}

CheckResult check_g_min_angle_decrease(int samples, std::uint64_t seed) {
    GOrbitStats st = g_orbit_stats(samples, seed);
    return make(
        "orbits", "g_squared_min_angle_decrease",
        st.mono_viol_pairs == 0,
        std::to_string(st.mono_viol_pairs) + " non-decreasing steps in " +
            std::to_string(st.mono_viol_orbits) + " of " +
            std::to_string(samples) +
            " orbits (roundoff at gap products below the double spacing "
            "near pi)");
}

CheckResult check_example_orbits() {
    // Reference iterates, four printed decimals.
    const std::array<std::array<double, 3>, 6> table1 = {{
        {3.0300, 2.6851, 0.5680},
        {0.6418, 2.5404, 3.1008},
        {3.1217, 2.9489, 0.2124},
        {0.2953, 2.8492, 3.1385},
        {3.1408, 3.1097, 0.0324},
        {0.0673, 3.0742, 3.1415},
    }};
    const std::array<std::array<double, 3>, 10> table2 = {{
        {2.3377, 2.2463, 1.6990},
        {1.8152, 1.9674, 2.5004},
        {2.4476, 2.3267, 1.5087},
        {1.6990, 1.9327, 2.6513},
        {2.5988, 2.4505, 1.2338},
        {1.5471, 1.9091, 2.8269},
        {2.7886, 2.6312, 0.8633},
        {1.3625, 1.9252, 2.9954},
        {2.9814, 2.8579, 0.4437},
        {1.1532, 2.0243, 3.1055},
    }};
    Orbit o1 = iterate(ExteriorTriple(1.0, 2.3, kTwoPi - 3.3), 6, 1e-6);
    Orbit o2 = iterate(ExteriorTriple(1.9, 2.0, kTwoPi - 3.9), 10, 1e-6);
    double worst = 0.0;
    bool ok = o1.states.size() >= 7 && o2.states.size() >= 11;
    if (ok) {
        for (std::size_t k = 0; k < table1.size(); ++k) {
            for (int c = 0; c < 3; ++c) {
                worst = std::max(worst, std::fabs(o1.states[k + 1][c] -
                                                  table1[k][c]));
            }
        }
        for (std::size_t k = 0; k < table2.size(); ++k) {
            for (int c = 0; c < 3; ++c) {
                worst = std::max(worst, std::fabs(o2.states[k + 1][c] -
                                                  table2[k][c]));
            }
        }
        ok = worst < 1e-3;
    }
    return make("orbits", "reference_orbit_tables", ok,
                "worst deviation from the printed values " + num(worst) +
                    " (gate 1e-3)");
}

CheckResult check_invert_roundtrip(std::uint64_t seed) {
    Lcg64 rng(seed);
    double worst = 0.0;
    int fails = 0;
    for (int i = 0; i < 100; ++i) {
        ExteriorTriple p = sample_exterior(rng);
        try {
            ExteriorTriple back = invert_g(map_g(p));
            worst = std::max(worst, quotient_distance(back, p));
        } catch (const Error&) {
            ++fails;
        }
    }
    bool ok = fails == 0 && worst < 1e-8;
    return make("orbits", "invert_roundtrip", ok,
                std::to_string(fails) + " failures, worst distance " +
                    num(worst) + " (gate 1e-8)");
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, int samples,
                                   std::uint64_t seed) {
    if (samples < 1) throw OutOfRange("samples must be >= 1");
    std::vector<CheckResult> out;
    bool all = suite == "all";
    if (!all && suite != "lemmas" && suite != "regions" && suite != "quad" &&
        suite != "orbits") {
        throw OutOfRange("unknown suite: " + suite);
    }
    if (all || suite == "lemmas") {
        out.push_back(check_f_min_max_monotonic(10000, 7));
        out.push_back(check_f_matches_edge_oracle(samples, seed));
        out.push_back(check_closed_form_images());
        out.push_back(check_gg_vs_double_application());
        out.push_back(check_stability_multipliers());
        out.push_back(check_gg_diagonal_increasing());
        out.push_back(check_gg_second_differences());
        out.push_back(check_bracket_positive());
        out.push_back(check_bracket_convexity_consistency());
        out.push_back(check_boundary_inequalities());
        out.push_back(check_richardson_u_limit());
    }
    if (all || suite == "regions") {
        out.push_back(check_region_reversal(samples, seed));
        out.push_back(check_region_pairing_table());
    }
    if (all || suite == "quad") {
        out.push_back(check_quad_edge_chain());
        out.push_back(check_single_step_sum_decrease());
        out.push_back(check_two_step_increase());
        out.push_back(check_h_orbits_converge());
        out.push_back(check_square_fixed_point());
    }
    if (all || suite == "orbits") {
        out.push_back(check_f_orbits(samples, seed));
        out.push_back(check_g_orbits_converge(samples, seed));
        out.push_back(check_g_min_angle_decrease(samples, seed));
        out.push_back(check_example_orbits());
        out.push_back(check_invert_roundtrip(seed));
    }
    return out;
}

std::string format_results(const std::vector<CheckResult>& results) {
    std::size_t w_suite = 5, w_name = 4;
    for (const auto& r : results) {
        w_suite = std::max(w_suite, r.suite.size());
        w_name = std::max(w_name, r.name.size());
    }
    std::string out;
    for (const auto& r : results) {
        out += r.suite;
        out.append(w_suite - r.suite.size() + 2, ' ');
        out += r.name;
        out.append(w_name - r.name.size() + 2, ' ');
        out += r.passed ? "PASS" : "FAIL";
        out += "  ";
        out += r.detail;
        out += '\n';
    }
    int failed = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failed;
    }
    out += failed == 0 ? "all checks passed\n"
                       : std::to_string(failed) + " of " +
                             std::to_string(results.size()) +
                             " checks failed\n";
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace tridyn::verify
