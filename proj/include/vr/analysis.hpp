#pragma once

// Per-(r,s) number-theoretic analysis: simplicity of the even algebra
// by exact factorization of chi, real embeddings by Sturm counts,
// exact signatures of trace forms, and the fingerprint used to compare
// a parameter with its modular inverse.

#include "vr/factor.hpp"
#include "vr/frobenius.hpp"
#include "vr/riley.hpp"

#include <map>
#include <tuple>

namespace vr {

// signature of the diagonal pairing on the even part: sum of eps_n
// over odd n
int sig_eta_plus(const SignSeq& seq);

// alternating-diagonal signature of the pairing on the full algebra
int sig_eta_full_diag(const SignSeq& seq);

// signature of (a,b) -> tr(a*b*t)
SignatureResult signature_trace_form(const FrobAlg& alg, const AlgElement& t);

// multiplicative inverse in the algebra (solves M_a z = 1); throws if
// a is not invertible
AlgElement invert(const FrobAlg& alg, const AlgElement& a);

// the same signature computed through the trace form with t the
// inverse of the even handle element; equals sig_eta_plus
int sig_eta_plus_via_trace_form(const FrobAlg& even_alg);

struct FactorInfo {
    RatPoly poly;  // monic irreducible
    int multiplicity = 1;
    int real_roots = 0;
    Rat disc;
};

struct AnalysisReport {
    int r = 0;
    int s = 0;
    int dim_plus = 0;
    IntPoly riley;
    IntPoly chi;
    bool simple = false;
    std::vector<int> factor_degrees;  // ascending, with multiplicity
    int r1 = 0;
    int sig_eta_plus = 0;
    int knot_sig = 0;
    bool inequality_strict = false;
    bool disc_odd = false;
    int eta_full_diag_signature = 0;
    std::vector<FactorInfo> factors;
};

AnalysisReport analyze(const Params& p, std::uint64_t seed = kDefaultSeed);

// squarefree kernel of a nonzero integer (sign preserved): the product
// of the primes of odd multiplicity. Full integer factorization under
// the hood (trial division plus Pollard rho), sized for the
// fingerprint discriminants, not for arbitrary large inputs.
Int squarefree_kernel(const Int& n);

struct Fingerprint {
    // one entry per irreducible factor of chi: degree, real-root
    // count, discriminant square class; sorted
    std::vector<std::tuple<int, int, Int>> items;
};

Fingerprint involution_fingerprint(const Params& p, std::uint64_t seed = kDefaultSeed);
bool compare_fingerprints(const Fingerprint& a, const Fingerprint& b);

}  // namespace vr
