#pragma once

// Exact real-root counting for squarefree rational polynomials via
// Sturm chains. The chain is kept over Z with primitive scaling (all
// scalings positive, so the sign variations are untouched).

#include "vr/poly.hpp"

namespace vr {

// number of real roots of a squarefree polynomial on the whole line
int sturm_real_roots(const RatPoly& f);

}  // namespace vr
