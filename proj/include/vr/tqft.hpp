#pragma once

// Exact genus invariants and colored-surface signatures through the
// Frobenius-algebra formulas, the floating-point Verlinde cross-check
// for s = 1, and the residue/trace reformulation of the counit.

#include "vr/frobenius.hpp"
#include "vr/riley.hpp"

namespace vr {

struct SurfaceSpec {
    int genus = 0;
    std::vector<int> colors;  // color labels (even when so3)
    bool so3 = false;
};

// <S_g> = eps(Omega^g) = tr(Omega^(g-1)); the even handle element is
// used when so3 is set. g = 0 gives eps(1) = 1.
Rat genus_invariant(const SignSeq& seq, int g, bool so3);

// eps(Omega^g e_{c_1} ... e_{c_n})
Rat surface_signature(const SignSeq& seq, const SurfaceSpec& spec);

struct VerlindeCheck {
    Rat exact;
    double approx = 0.0;
    bool agree = false;
};

// s = 1 only: exact trace against the floating sine sum
// (r/2)^(g-1) * sum_k sin(k pi / r)^(2-2g), relative tolerance 1e-9
VerlindeCheck verlinde_crosscheck(int r, int g);

// eps(f) computed as tr((P_{r-2} f / P'_{r-1})(x)) via the modular
// inverse of P'_{r-1} mod P_{r-1}, compared against the coordinate of
// f in the P-basis; true when the two routes agree
bool residue_crosscheck(const SignSeq& seq, const RatPoly& f);

// even-part variant: eps(f(w)) against -2 tr((f * (chi' * chi(-t))^{-1})(w))
bool residue_crosscheck_so3(const SignSeq& seq, const RatPoly& f);

// the even handle element computed four ways: orthogonal-basis sum,
// half of the embedded full handle element, w R'(-w^2), and
// -1/2 chi'(w) chi(-w)
bool omega_plus_consistent(const SignSeq& seq);

// coefficients of q in the basis P_0..P_{r-1} (q of degree < r)
std::vector<Rat> decompose_in_orth_basis(const std::vector<IntPoly>& basis, const RatPoly& q);

}  // namespace vr
