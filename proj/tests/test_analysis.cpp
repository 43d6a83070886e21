#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vr/analysis.hpp"

#include <random>

using namespace vr;

TEST_CASE("diagonal signature examples") {
    CHECK(sig_eta_plus(SignSeq{Params(5, 1)}) == 2);
    CHECK(sig_eta_plus(SignSeq{Params(11, 7)}) == -1);
    CHECK(sig_eta_plus(SignSeq{Params(23, 15)}) == -3);
    CHECK(sig_eta_plus(SignSeq{Params(15, 13)}) == 1);
}

TEST_CASE("full-diagonal signature vanishes by symmetry") {
    // the alternating diagonal of the full pairing sums to zero, unlike
    // the sum of the eps_n
    for (auto [r, s] : std::vector<std::pair<int, int>>{{5, 1}, {7, 3}, {13, 9}, {21, 11}}) {
        SignSeq seq{Params(r, s)};
        CHECK(sig_eta_full_diag(seq) == 0);
        CHECK(knot_signature(seq) == 2 * sig_eta_plus(seq));
    }
}

TEST_CASE("trace-form route agrees with the diagonal") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{5, 1}, {5, 3}, {7, 5}, {9, 7}, {11, 3}}) {
        SignSeq seq{Params(r, s)};
        FrobAlg even = FrobAlg::build_even(FrobAlg::build_full(seq));
        CHECK(sig_eta_plus_via_trace_form(even) == sig_eta_plus(seq));
        // sg(Omega) = sg(Omega^{-1})
        SignatureResult direct = signature_trace_form(even, even.omega());
        CHECK_FALSE(direct.degenerate);
        CHECK(direct.signature == sig_eta_plus(seq));
    }
}

TEST_CASE("trace form of the unit counts real embeddings") {
    // (5,1): totally real quadratic field -> signature 2
    {
        SignSeq seq{Params(5, 1)};
        FrobAlg even = FrobAlg::build_even(FrobAlg::build_full(seq));
        SignatureResult s = signature_trace_form(even, even.unit());
        CHECK(s.signature == 2);
    }
    // (5,3): complex quadratic field -> signature 0
    {
        SignSeq seq{Params(5, 3)};
        FrobAlg even = FrobAlg::build_even(FrobAlg::build_full(seq));
        SignatureResult s = signature_trace_form(even, even.unit());
        CHECK(s.signature == 0);
    }
}

TEST_CASE("planted signatures survive congruence scrambling") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> vdist(1, 9);
    std::uniform_int_distribution<long> edist(-3, 3);
    for (int it = 0; it < 20; ++it) {
        const int n = 6;
        RatMat d = RatMat::Zero(n, n);
        int planted = 0;
        for (int i = 0; i < n; ++i) {
            long v = vdist(rng);
            if (rng() % 2 == 0) v = -v;
            planted += v > 0 ? 1 : -1;
            d(i, i) = Rat(v);
        }
        // random integer unimodular congruence
        RatMat s = RatMat::Identity(n, n);
        for (int k = 0; k < 12; ++k) {
            int i = static_cast<int>(rng() % n);
            int j = static_cast<int>(rng() % n);
            if (i == j) continue;
            RatMat e = RatMat::Identity(n, n);
            e(i, j) = Rat(edist(rng));
            s = s * e;
        }
        RatMat g = s.transpose() * d * s;
        SignatureResult res = signature_of_symmetric(g);
        CHECK_FALSE(res.degenerate);
        CHECK(res.signature == planted);
        CHECK(res.rank == n);
    }
}

TEST_CASE("analysis reports") {
    AnalysisReport a = analyze(Params(5, 3));
    CHECK(a.simple);
    CHECK(a.r1 == 0);
    CHECK(a.sig_eta_plus == 0);
    CHECK_FALSE(a.inequality_strict);
    CHECK(a.disc_odd);
    CHECK(a.chi == IntPoly{1, -1, 1});

    AnalysisReport b = analyze(Params(9, 1));
    CHECK_FALSE(b.simple);

    AnalysisReport c = analyze(Params(15, 11));
    CHECK_FALSE(c.simple);
    CHECK(c.sig_eta_plus == 1);

    AnalysisReport d = analyze(Params(3, 1));
    CHECK(d.simple);
    CHECK(d.r1 == 1);
    CHECK(d.sig_eta_plus == 1);
}

TEST_CASE("squarefree kernels") {
    CHECK(squarefree_kernel(Int(1)) == 1);
    CHECK(squarefree_kernel(Int(4)) == 1);
    CHECK(squarefree_kernel(Int(12)) == 3);
    CHECK(squarefree_kernel(Int(-75)) == -3);
    CHECK(squarefree_kernel(Int("1000003") * Int("1000003") * 5) == 5);
    CHECK_THROWS_AS(squarefree_kernel(Int(0)), std::domain_error);
}

TEST_CASE("fingerprints match across the involution") {
    // s = 5 and s = 3 are inverse mod 7
    Fingerprint a = involution_fingerprint(Params(7, 5));
    Fingerprint b = involution_fingerprint(Params(7, 3));
    CHECK(compare_fingerprints(a, b));

    // s = 1 is self-inverse
    CHECK(compare_fingerprints(involution_fingerprint(Params(11, 1)),
                               involution_fingerprint(Params(11, 1))));

    // distinct factor structures do not collide
    Fingerprint c = involution_fingerprint(Params(9, 1));   // reducible
    Fingerprint d = involution_fingerprint(Params(9, 5));   // irreducible
    CHECK_FALSE(compare_fingerprints(c, d));
    Fingerprint e = involution_fingerprint(Params(5, 1));   // r1 = 2
    Fingerprint f = involution_fingerprint(Params(5, 3));   // r1 = 0
    CHECK_FALSE(compare_fingerprints(e, f));
}

TEST_CASE("degenerate trace form is reported distinctly") {
    RatMat z = RatMat::Zero(3, 3);
    z(0, 0) = Rat(2);
    SignatureResult s = signature_of_symmetric(z);
    CHECK(s.degenerate);
}
