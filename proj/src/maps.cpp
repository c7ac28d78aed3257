#include "tridyn/maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tridyn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::array<double, 3> scaled_sines(const std::array<double, 3>& a,
                                   double total) {
    std::array<double, 3> s = {std::sin(a[0]), std::sin(a[1]),
                               std::sin(a[2])};
    double tot = s[0] + s[1] + s[2];
    if (tot < kSineSumFloor) {
        throw DegenerateInput("sum of sines below 1e-12");
    }
    return {total * s[0] / tot, total * s[1] / tot, total * s[2] / tot};
}

}  // namespace

InteriorTriple map_f(const InteriorTriple& t) {
    return InteriorTriple(scaled_sines(t.angles(), kPi));
}

ExteriorTriple map_g(const ExteriorTriple& t) {
    return ExteriorTriple(scaled_sines(t.angles(), kTwoPi));
}

bool is_in_f_image(const InteriorTriple& t) {
    const auto& a = t.angles();
    double mx = std::max({a[0], a[1], a[2]});
    double sum = a[0] + a[1] + a[2];
    return mx < sum - mx;
}

ExteriorTriple invert_g(const ExteriorTriple& target, double tol,
                        int max_steps) {
    if (!(tol > 0.0) || max_steps < 1) {
        throw OutOfRange("invert_g requires tol > 0 and max_steps >= 1");
    }
    const auto& tgt = target.angles();
    for (double x : tgt) {
        if (x <= tol || kPi - x <= tol) {
            throw DegenerateInput(
                "target component within tol of 0 or pi; inverse is "
                "ill-conditioned there");
        }
    }

    // Chart coordinates: p = (x, y, 2*pi - x - y).
    double x = tgt[0];
    double y = tgt[1];

    auto eval = [&](double px, double py, std::array<double, 3>& out) {
        double pz = kTwoPi - px - py;
        if (!(px > 0.0) || !(py > 0.0) || !(pz > 0.0) || !(px < kPi) ||
            !(py < kPi) || !(pz < kPi)) {
            return false;
        }
        double sx = std::sin(px), sy = std::sin(py), sz = std::sin(pz);
        double tot = sx + sy + sz;
        if (tot < kSineSumFloor) return false;
        out = {kTwoPi * sx / tot, kTwoPi * sy / tot, kTwoPi * sz / tot};
        return true;
    };

    std::array<double, 3> img;
    if (!eval(x, y, img)) {
        throw DegenerateInput("target chart point outside the domain");
    }
    double f1 = img[0] - tgt[0];
    double f2 = img[1] - tgt[1];
    double res = std::hypot(f1, f2);

    for (int step = 0; step < max_steps; ++step) {
        if (res < tol) {
            return ExteriorTriple(x, y, kTwoPi - x - y);
        }
        double z = kTwoPi - x - y;
        double sx = std::sin(x), sy = std::sin(y), sz = std::sin(z);
        double cx = std::cos(x), cy = std::cos(y), cz = std::cos(z);
        double S = sx + sy + sz;
        double S2 = S * S;
        // d/dx and d/dy of (2*pi*sin(x)/S, 2*pi*sin(y)/S) with
        // z = 2*pi - x - y, so dS/dx = cos(x) - cos(z).
        double j11 = kTwoPi * (cx * S - sx * (cx - cz)) / S2;
        double j12 = kTwoPi * (-sx * (cy - cz)) / S2;
        double j21 = kTwoPi * (-sy * (cx - cz)) / S2;
        double j22 = kTwoPi * (cy * S - sy * (cy - cz)) / S2;
        double det = j11 * j22 - j12 * j21;
        if (!std::isfinite(det) || std::fabs(det) < 1e-300) {
            throw NoConvergence("singular Jacobian in invert_g");
        }
        double dx = (j22 * f1 - j12 * f2) / det;
        double dy = (j11 * f2 - j21 * f1) / det;

        bool accepted = false;
        double lam = 1.0;
        for (int half = 0; half <= 20; ++half) {
            double nx = x - lam * dx;
            double ny = y - lam * dy;
            std::array<double, 3> nimg;
            if (eval(nx, ny, nimg)) {
                double nf1 = nimg[0] - tgt[0];
                double nf2 = nimg[1] - tgt[1];
                double nres = std::hypot(nf1, nf2);
                if (nres < res) {
                    x = nx;
                    y = ny;
                    f1 = nf1;
                    f2 = nf2;
                    res = nres;
                    accepted = true;
                    break;
                }
            }
            lam *= 0.5;
        }
        if (!accepted) {
            throw NoConvergence(
                "invert_g stalled: no damped step reduced the residual");
        }
    }
    if (res < tol) {
        return ExteriorTriple(x, y, kTwoPi - x - y);
    }
    throw NoConvergence("invert_g did not reach tolerance in max_steps");
}

}  // namespace tridyn
