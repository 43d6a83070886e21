#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vr/riley.hpp"

using namespace vr;

TEST_CASE("three-term recursion") {
    // (3,1): P_2 = X^2 + 1
    std::vector<IntPoly> a = orth_polys(SignSeq{Params(3, 1)});
    CHECK(a[2] == IntPoly{1, 0, 1});

    // (5,3): P_2 = X^2 - 1, P_3 = X^3, P_4 = X^4 - X^2 + 1
    std::vector<IntPoly> b = orth_polys(SignSeq{Params(5, 3)});
    CHECK(b[2] == IntPoly{-1, 0, 1});
    CHECK(b[3] == IntPoly{0, 0, 0, 1});
    CHECK(b[4] == IntPoly{1, 0, -1, 0, 1});

    // (5,1): P_4 = X^4 + 3X^2 + 1
    std::vector<IntPoly> c = orth_polys(SignSeq{Params(5, 1)});
    CHECK(c[4] == IntPoly{1, 0, 3, 0, 1});
}

TEST_CASE("monic, degree, parity") {
    for (int r : {9, 13, 21}) {
        for (int s = 1; s < r; s += 2) {
            if (!valid_params(r, s)) continue;
            SignSeq seq{Params(r, s)};
            std::vector<IntPoly> ps = orth_polys(seq);
            for (int n = 0; n < r; ++n) {
                CHECK(ps[n].degree() == n);
                CHECK(ps[n].leading() == 1);
                CHECK(flip_arg(ps[n]) == (n % 2 == 0 ? ps[n] : -ps[n]));
            }
        }
    }
}

TEST_CASE("tridiagonal minors") {
    SignSeq seq{Params(5, 3)};
    std::vector<IntPoly> ps = orth_polys(seq);
    CHECK(tridiag_minor(seq, 1) == IntPoly::identity());
    for (int n = 0; n <= 4; ++n) CHECK(tridiag_minor(seq, n) == ps[n]);

    // sample-point crosscheck against a dense determinant of xI - T
    IntMat t = tridiag_matrix(seq);
    for (long x0 : {-2L, 0L, 1L, 3L, 7L}) {
        IntMat m = IntMat::Identity(4, 4) * Int(x0) - t;
        CHECK(det_bareiss(m) == ps[4](Int(x0)));
    }
}

TEST_CASE("continuants") {
    IntPoly x = IntPoly::identity();
    CHECK(continuant({}) == IntPoly{1});
    CHECK(continuant({x}) == x);
    // K_2(x1, x2) = x1 x2 + 1
    CHECK(continuant({x, x}) == IntPoly{1, 0, 1});
    CHECK(continuant({IntPoly{2}, IntPoly{3}, IntPoly{5}}) == IntPoly{2 * 3 * 5 + 2 + 5});

    // both continuant routes agree on a mixed list
    std::vector<IntPoly> xs{x, IntPoly{1, 2}, x, IntPoly{-1}, IntPoly{0, 0, 1}};
    CHECK(continuant(xs) == continuant_via_matrices(xs));
}

TEST_CASE("continuant route to the top polynomial") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{5, 3}, {7, 5}, {11, 7}}) {
        SignSeq seq{Params(r, s)};
        std::vector<IntPoly> xs;
        for (int n = 1; n <= r - 1; ++n) xs.push_back(IntPoly::monomial(Int(seq.eps(n)), 1));
        CHECK(continuant(xs) == orth_polys(seq)[static_cast<size_t>(r) - 1]);
    }
}

TEST_CASE("continued-fraction convergents") {
    SignSeq seq{Params(5, 3)};
    std::vector<std::pair<IntPoly, IntPoly>> conv = cf_convergents(seq);
    std::vector<IntPoly> ps = orth_polys(seq);
    REQUIRE(conv.size() == 4);
    CHECK(conv[0] == std::pair<IntPoly, IntPoly>{IntPoly::identity(), IntPoly{1}});
    for (size_t k = 0; k < conv.size(); ++k) CHECK(conv[k].first == ps[k + 1]);
    CHECK(conv.back().first == ps[4]);
    CHECK(conv.back().second == ps[3]);
}

TEST_CASE("riley polynomial via the parabolic word") {
    CHECK(riley_via_sl2(SignSeq{Params(3, 1)}) == IntPoly{1, 1});          // trefoil
    CHECK(riley_via_sl2(SignSeq{Params(5, 3)}) == IntPoly{1, -1, 1});      // figure eight
    CHECK(riley_via_sl2(SignSeq{Params(5, 1)}) == IntPoly{1, 3, 1});

    // unimodularity of the generators propagates to the word product
    for (auto [r, s] : std::vector<std::pair<int, int>>{{7, 3}, {9, 5}, {13, 11}}) {
        SignSeq seq{Params(r, s)};
        IntPoly R = riley_via_sl2(seq);
        CHECK(R.degree() == (r - 1) / 2);
        CHECK(R.leading() == 1);
        Int c0 = R.coeff(0);
        CHECK((c0 == 1 || c0 == -1));
    }
}

TEST_CASE("sl2 word entries are unimodular") {
    SL2Poly u = SL2Poly::one();
    u.e[1] = IntPoly{1};
    SL2Poly v = SL2Poly::one();
    v.e[2] = IntPoly::monomial(Int(-1), 1);
    SL2Poly w = u * v * u * v;
    CHECK(w.det() == IntPoly{1});
}

TEST_CASE("even-coefficient readback") {
    CHECK(riley_from_P(IntPoly{1, 0, -1, 0, 1}) == IntPoly{1, -1, 1});
    CHECK(riley_from_P(IntPoly{1, 0, 1}) == IntPoly{1, 1});
    CHECK(riley_from_P(IntPoly{1, 0, 3, 0, 1}) == IntPoly{1, 3, 1});
    CHECK_THROWS_AS(riley_from_P(IntPoly{1, 1}), std::domain_error);
}

TEST_CASE("banded matrix and chi") {
    SignSeq seq{Params(5, 3)};
    IntMat w = w_matrix(seq);
    REQUIRE(w.rows() == 2);
    CHECK(w(0, 0) == 0);
    CHECK(w(0, 1) == 1);   // eps_4
    CHECK(w(1, 0) == -1);  // eps_2
    CHECK(w(1, 1) == 1);   // -eps_3
    CHECK(chi_via_W(seq) == IntPoly{1, -1, 1});

    // r = 3 degenerates to the 1x1 matrix [eps_2]
    SignSeq t{Params(3, 1)};
    CHECK(chi_via_W(t) == IntPoly{-1, 1});

    // chi(t)chi(-t) = R(-t^2) on a small sample
    for (auto [r, s] : std::vector<std::pair<int, int>>{{5, 1}, {9, 7}, {11, 5}}) {
        SignSeq seq2{Params(r, s)};
        IntPoly chi = chi_via_W(seq2);
        IntPoly R = riley_via_sl2(seq2);
        CHECK(chi * flip_arg(chi) == compose(R, IntPoly{0, 0, -1}));
        Int c0 = chi.coeff(0);
        CHECK((c0 == 1 || c0 == -1));
    }
}
