#pragma once

// Exact test for "every root has strictly positive real part" via the
// Routh array applied to f(-t). Roots on the imaginary axis are
// detected separately (gcd of the real and imaginary parts of f(iy))
// and reported as a distinct boundary condition.

#include "vr/poly.hpp"

namespace vr {

struct StabilityResult {
    bool all_positive = false;
    bool imaginary_axis = false;  // criterion boundary: roots with zero real part
};

// pre: f monic and squarefree, deg >= 1
StabilityResult routh_positive_real_parts(const RatPoly& f);

}  // namespace vr
