#pragma once

// Deterministic sampling utilities.  A fixed 64-bit LCG (not std::mt19937)
// keeps sampled sequences reproducible bit-for-bit across platforms and
// standard-library versions, which the test oracles rely on.

#include <cstdint>

#include "tridyn/triple.hpp"

namespace tridyn {

class Lcg64 {
  public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

// Uniform point of the open simplex {x+y+z = pi, x,y,z > 0} via sorted
// uniform pair coordinates.
InteriorTriple sample_interior(Lcg64& rng);

// Componentwise pi-complement of a sampled interior triple (sums to 2*pi).
ExteriorTriple sample_exterior(Lcg64& rng);

// Resamples until the rotation-class distance to the symmetric point
// (2*pi/3, 2*pi/3, 2*pi/3) is at least `min_distance`.
ExteriorTriple sample_exterior_away_from_center(Lcg64& rng,
                                                double min_distance);

}  // namespace tridyn
