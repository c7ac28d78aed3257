#include "tridyn/rng.hpp"

#include <numbers>

namespace tridyn {

namespace {
constexpr double kPi = std::numbers::pi;
}

InteriorTriple sample_interior(Lcg64& rng) {
    double u = rng.uniform();
    double v = rng.uniform();
    double lo, hi;
    if (u <= v) {
        lo = u;
        hi = v;
    } else {
        lo = v;
        hi = u;
    }
    return InteriorTriple(lo * kPi, (hi - lo) * kPi, (1.0 - hi) * kPi);
}

ExteriorTriple sample_exterior(Lcg64& rng) {
    InteriorTriple t = sample_interior(rng);
    return ExteriorTriple(kPi - t[0], kPi - t[1], kPi - t[2]);
}

ExteriorTriple sample_exterior_away_from_center(Lcg64& rng,
                                                double min_distance) {
    const std::array<double, 3> center = {2.0 * kPi / 3.0, 2.0 * kPi / 3.0,
                                          2.0 * kPi / 3.0};
    for (;;) {
        ExteriorTriple t = sample_exterior(rng);
        if (quotient_distance_raw(t.angles(), center) >= min_distance) {
            return t;
        }
    }
}

}  // namespace tridyn
