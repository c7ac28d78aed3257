#pragma once

// The two single-step triangle maps.  map_f sends interior angles to the
// edge lengths of the triangle rescaled to perimeter pi, read back as
// interior angles; map_g does the same for exterior angles at perimeter
// 2*pi.  map_f contracts toward the equilateral triple, map_g pushes away
// from it; g is invertible on valid triples, f is not surjective.

#include "tridyn/triple.hpp"

namespace tridyn {

// Threshold on the sum of sines below which a map input is rejected.
inline constexpr double kSineSumFloor = 1e-12;

InteriorTriple map_f(const InteriorTriple& t);
ExteriorTriple map_g(const ExteriorTriple& t);

// True iff the angles, read as edge lengths, satisfy the strict triangle
// inequality — exactly the condition for t to be an output of map_f.
bool is_in_f_image(const InteriorTriple& t);

// Preimage of `target` under map_g, found by damped Newton iteration on the
// 2D chart (first two components; third = 2*pi - sum), started at the
// target itself.
ExteriorTriple invert_g(const ExteriorTriple& target, double tol = 1e-10,
                        int max_steps = 100);

}  // namespace tridyn
