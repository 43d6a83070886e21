#pragma once

// Polynomial side of the construction: the three-term recursion P_n,
// tridiagonal minors, continuants, continued-fraction convergents, the
// Riley polynomial of K(r,s) from the parabolic SL2 word, and the
// characteristic polynomial chi of the banded matrix W.

#include "vr/matrix.hpp"
#include "vr/params.hpp"

#include <array>

namespace vr {

// 2x2 matrix of integer polynomials with determinant 1.
struct SL2Poly {
    std::array<IntPoly, 4> e;  // row-major: a b / c d

    static SL2Poly one() {
        SL2Poly m;
        m.e = {IntPoly{1}, IntPoly{}, IntPoly{}, IntPoly{1}};
        return m;
    }

    IntPoly det() const { return e[0] * e[3] - e[1] * e[2]; }

    friend SL2Poly operator*(const SL2Poly& x, const SL2Poly& y) {
        SL2Poly r;
        r.e[0] = x.e[0] * y.e[0] + x.e[1] * y.e[2];
        r.e[1] = x.e[0] * y.e[1] + x.e[1] * y.e[3];
        r.e[2] = x.e[2] * y.e[0] + x.e[3] * y.e[2];
        r.e[3] = x.e[2] * y.e[1] + x.e[3] * y.e[3];
        return r;
    }
};

// P_0..P_{r-1}: P_0 = 1, P_1 = X, P_{n+1} = X P_n + eps_n eps_{n+1} P_{n-1}.
// P_n is monic of degree n with the parity of n.
std::vector<IntPoly> orth_polys(const SignSeq& seq);

// The (r-1) x (r-1) tridiagonal matrix whose X-shifted leading minors
// are the P_n: subdiagonal 1, superdiagonal -eps_n eps_{n+1}, zero
// diagonal (X lives on the diagonal conceptually).
IntMat tridiag_matrix(const SignSeq& seq);

// n-th leading principal minor of (X I - shifted tridiagonal) as a
// polynomial, i.e. P_n by the determinant recurrence.
IntPoly tridiag_minor(const SignSeq& seq, int n);

// Continuant K_n(x_1..x_n) = x_1 K_{n-1}(x_2..x_n) + K_{n-2}(x_3..x_n),
// K_0 = 1, K_{-1} = 0.
IntPoly continuant(const std::vector<IntPoly>& xs);

// Same value assembled from the 2x2 product of [[x_i,1],[1,0]]; usable
// as an independent route.
IntPoly continuant_via_matrices(const std::vector<IntPoly>& xs);

// Convergents of X + e1e2/(X + e2e3/(... + e_{r-2}e_{r-1}/X)) as
// (numerator, denominator) pairs. The k-th numerator is P_{k+1}; the
// final convergent is (P_{r-1}, P_{r-2}) because the sign pattern
// e_k e_{k+1} is palindromic.
std::vector<std::pair<IntPoly, IntPoly>> cf_convergents(const SignSeq& seq);

// Riley polynomial of K(r,s): upper-left entry of the parabolic word
// product u^{e_1} v^{e_2} ... u^{e_{r-2}} v^{e_{r-1}} with
// u = [[1,1],[0,1]], v = [[1,0],[x,1]]. The entry comes out monic of
// degree (r-1)/2; a failed monicity check signals a construction bug.
IntPoly riley_via_sl2(const SignSeq& seq);

// Read R off an even polynomial P = R(X^2); throws if P has a nonzero
// odd-degree coefficient.
IntPoly riley_from_P(const IntPoly& p);

// The banded antidiagonal matrix of w acting on the even part, and
// chi(t) = det(tI - W). Works for every r >= 3 (size 1 at r = 3).
IntMat w_matrix(const SignSeq& seq);
IntPoly chi_via_W(const SignSeq& seq);

}  // namespace vr
