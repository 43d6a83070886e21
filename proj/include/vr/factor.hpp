#pragma once

// Complete factorization over Q: squarefree decomposition, then per
// squarefree part a modular factorization (distinct-degree plus
// equal-degree splitting at a small odd prime), quadratic Hensel
// lifting above the Mignotte bound, and Zassenhaus subset
// recombination. Deterministic for a fixed seed; the emitted factor
// list is additionally sorted, so the output does not depend on the
// splitting randomness at all.

#include "vr/poly.hpp"

#include <cstdint>
#include <tuple>

namespace vr {

struct Factorization {
    RatPoly input;
    Rat unit;  // input = unit * prod factors[i]^mult[i]
    std::vector<std::pair<RatPoly, int>> factors;  // monic irreducible over Q

    bool is_irreducible() const {
        return factors.size() == 1 && factors[0].second == 1;
    }
};

inline constexpr std::uint64_t kDefaultSeed = 0x1005eed;

Factorization factor_over_Q(const RatPoly& f, std::uint64_t seed = kDefaultSeed);

// Extended gcd over Q: returns monic g and u, v with u*a + v*b = g.
std::tuple<RatPoly, RatPoly, RatPoly> poly_ext_gcd(const RatPoly& a, const RatPoly& b);

// true iff the discriminant of an integer-coefficient polynomial is an
// odd integer
bool disc_odd_check(const RatPoly& f);

}  // namespace vr
