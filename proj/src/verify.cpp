#include "vr/verify.hpp"

#include "vr/analysis.hpp"
#include "vr/factor.hpp"
#include "vr/modpoly.hpp"
#include "vr/tqft.hpp"

#include <cstdlib>
#include <sstream>

namespace vr {

namespace {

std::string cell(const Params& p) {
    std::ostringstream os;
    os << "(" << p.r << "," << p.s << ")";
    return os.str();
}

// (e_i e_j) e_k on the integer path
std::vector<long long> triple_product(const FrobAlg& alg, int i, int j, int k) {
    const int n = alg.dim();
    std::vector<long long> out(static_cast<size_t>(n), 0);
    const std::int32_t* u = alg.row(i, j);
    for (int m = 0; m < n; ++m) {
        if (u[m] == 0) continue;
        const std::int32_t* rw = alg.row(m, k);
        const long long um = u[m];
        for (int l = 0; l < n; ++l) out[static_cast<size_t>(l)] += um * rw[l];
    }
    return out;
}

std::vector<long long> basis_int(const FrobAlg& alg, int i) {
    std::vector<long long> v(static_cast<size_t>(alg.dim()), 0);
    v[static_cast<size_t>(i)] = 1;
    return v;
}

bool is_zero_vec(const std::vector<long long>& v) {
    for (long long x : v) {
        if (x != 0) return false;
    }
    return true;
}

}  // namespace

CheckReport verify_algebra_tables(const FrobAlg& alg) {
    CheckReport rep;
    const int n = alg.dim();

    for (int j = 0; j < n && rep.failures.size() < 8; ++j) {
        const std::int32_t* rw = alg.row(0, j);
        for (int k = 0; k < n; ++k) {
            if (rw[k] != (k == j ? 1 : 0)) {
                rep.fail("unit axiom at (0," + std::to_string(j) + ")");
                break;
            }
        }
    }

    for (int i = 0; i < n && rep.failures.size() < 8; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::int32_t* a = alg.row(i, j);
            const std::int32_t* b = alg.row(j, i);
            for (int k = 0; k < n; ++k) {
                if (a[k] != b[k]) {
                    rep.fail("commutativity at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                    break;
                }
            }
        }
    }

    for (int i = 0; i < n && rep.failures.size() < 8; ++i) {
        for (int j = 0; j < n; ++j) {
            std::int32_t expected =
                (i == j) ? static_cast<std::int32_t>(alg.eta_diag()[static_cast<size_t>(i)]) : 0;
            if (alg.row(i, j)[0] != expected) {
                rep.fail("pairing via counit at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }

    // associativity and the total symmetry of eps(e_i e_j e_k) in one pass
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int k = j; k < n; ++k) {
                std::vector<long long> a = triple_product(alg, i, j, k);
                std::vector<long long> b = triple_product(alg, j, k, i);
                if (a != b) {
                    rep.fail("associativity at (" + std::to_string(i) + "," + std::to_string(j) +
                             "," + std::to_string(k) + ")");
                    if (rep.failures.size() >= 8) return rep;
                    continue;
                }
                std::vector<long long> c = triple_product(alg, k, i, j);
                if (a != c) {
                    rep.fail("associativity at (" + std::to_string(i) + "," + std::to_string(j) +
                             "," + std::to_string(k) + ")");
                    if (rep.failures.size() >= 8) return rep;
                }
            }
        }
    }
    return rep;
}

CheckReport verify_algebra(const Params& p) {
    CheckReport rep;
    SignSeq seq(p);
    const int r = p.r;
    FrobAlg full = FrobAlg::build_full(seq);
    rep.merge(verify_algebra_tables(full));

    FrobAlg even = [&]() {
        try {
            return FrobAlg::build_even(full);
        } catch (const std::logic_error&) {
            rep.fail("even-part closure " + cell(p));
            throw;
        }
    }();

    const int n = full.dim();

    // e_1 e_m = -eps_m eps_{m+1} e_{m-1} + e_{m+1}
    for (int m = 0; m < n; ++m) {
        std::vector<long long> expect(static_cast<size_t>(n), 0);
        if (m - 1 >= 0) expect[static_cast<size_t>(m) - 1] -= seq.eps(m) * seq.eps(m + 1);
        if (m + 1 < n) expect[static_cast<size_t>(m) + 1] += 1;
        std::vector<long long> got = full.mult_int(basis_int(full, 1), basis_int(full, m));
        if (got != expect) rep.fail("three-term recursion at n=" + std::to_string(m) + " " + cell(p));
    }

    // iota e_m = (-1)^m eps_{m+1} e_{r-2-m}
    for (int m = 0; m < n; ++m) {
        std::vector<long long> expect(static_cast<size_t>(n), 0);
        expect[static_cast<size_t>(r) - 2 - static_cast<size_t>(m)] =
            (m % 2 == 0 ? 1 : -1) * seq.eps(m + 1);
        std::vector<long long> got = full.mult_int(basis_int(full, r - 2), basis_int(full, m));
        if (got != expect) rep.fail("iota action at n=" + std::to_string(m) + " " + cell(p));
    }

    // iota^2 = -1
    {
        std::vector<long long> expect(static_cast<size_t>(n), 0);
        expect[0] = -1;
        if (full.mult_int(basis_int(full, r - 2), basis_int(full, r - 2)) != expect) {
            rep.fail("iota squared " + cell(p));
        }
    }

    if (r >= 5) {
        // x^2 = y - eps_2 and w^2 = -x^2
        std::vector<long long> x2 = full.mult_int(basis_int(full, 1), basis_int(full, 1));
        std::vector<long long> expect(static_cast<size_t>(n), 0);
        expect[2] = 1;
        expect[0] = -seq.eps(2);
        if (x2 != expect) rep.fail("x^2 = y - eps_2 " + cell(p));
        std::vector<long long> w2 = full.mult_int(basis_int(full, r - 3), basis_int(full, r - 3));
        for (int k = 0; k < n; ++k) {
            if (w2[static_cast<size_t>(k)] != -x2[static_cast<size_t>(k)]) {
                rep.fail("w^2 = -x^2 " + cell(p));
                break;
            }
        }
    }

    // e_m = P_m(e_1) and P_{r-1}(e_1) = 0
    std::vector<IntPoly> orth = orth_polys(seq);
    {
        std::vector<long long> prev = basis_int(full, 0);
        std::vector<long long> cur = basis_int(full, 1);
        bool bad = false;
        for (int m = 1; m < n; ++m) {
            std::vector<long long> next = full.mult_int(basis_int(full, 1), cur);
            int c = seq.eps(m) * seq.eps(m + 1);
            for (int k = 0; k < n; ++k) {
                next[static_cast<size_t>(k)] += c * prev[static_cast<size_t>(k)];
            }
            if (m + 1 < n && next != basis_int(full, m + 1)) bad = true;
            if (m + 1 == n && !is_zero_vec(next)) {
                rep.fail("top polynomial does not annihilate x " + cell(p));
            }
            prev = std::move(cur);
            cur = std::move(next);
        }
        if (bad) rep.fail("basis does not match the polynomial recursion " + cell(p));
    }

    // handle element: omega = -iota P'_{r-1}(x), omega = 2 omega_plus
    AlgElement omega = full.omega();
    {
        RatPoly dtop = derivative(to_rat_poly(orth[static_cast<size_t>(r) - 1]));
        AlgElement rhs = -(full.gen_iota() * full.evaluate(dtop, full.gen_x()));
        if (!(omega == rhs)) rep.fail("handle element vs derivative formula " + cell(p));

        std::vector<long long> om = full.omega_int();
        std::vector<long long> omp = even.omega_int();
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            long long expect = 0;
            if (i % 2 == 0) expect = 2 * omp[static_cast<size_t>(i) / 2];
            if (om[static_cast<size_t>(i)] != expect) ok = false;
        }
        if (!ok) rep.fail("handle element vs even part " + cell(p));

        if (sign_of(det_bareiss(full.mult_matrix_int(om))) == 0) {
            rep.fail("handle element not invertible " + cell(p));
        }
    }

    // R(t) as the minimal and characteristic polynomial of x^2 on the even part
    {
        std::vector<long long> x2 = full.mult_int(basis_int(full, 1), basis_int(full, 1));
        std::vector<long long> x2even(static_cast<size_t>(even.dim()), 0);
        for (int i = 0; i < even.dim(); ++i) x2even[static_cast<size_t>(i)] = x2[static_cast<size_t>(2 * i)];
        RatPoly riley = to_rat_poly(riley_via_sl2(seq));
        RatPoly mp = even.min_poly(even.from_int_coords(x2even));
        if (mp != riley) rep.fail("minimal polynomial of x^2 on the even part is not R " + cell(p));
        if (mp.degree() != even.dim()) rep.fail("x^2 does not generate the even part " + cell(p));
        RatPoly cp = char_poly_int_as_rat(even.mult_matrix_int(x2even));
        if (cp != riley) rep.fail("characteristic polynomial of x^2 on the even part is not R " + cell(p));
    }

    // chi as the characteristic polynomial of w on the even part; the
    // banded matrix is the transpose of the action matrix
    {
        std::vector<long long> wc(static_cast<size_t>(even.dim()), 0);
        wc[(static_cast<size_t>(r) - 3) / 2] = seq.eps(2);
        IntMat action = even.mult_matrix_int(wc);
        IntMat banded = w_matrix(seq);
        if (action != banded && action != IntMat(banded.transpose())) {
            rep.fail("banded matrix differs from the w action " + cell(p));
        }
        RatPoly cp = char_poly_int_as_rat(action);
        if (cp != to_rat_poly(chi_via_W(seq))) {
            rep.fail("characteristic polynomial of w differs from chi " + cell(p));
        }
    }

    return rep;
}

CheckReport verify_poly_identities(const Params& p) {
    CheckReport rep;
    SignSeq seq(p);
    const int r = p.r;
    std::vector<IntPoly> orth = orth_polys(seq);
    const IntPoly& top = orth[static_cast<size_t>(r) - 1];
    const IntPoly& sub = orth[static_cast<size_t>(r) - 2];

    for (int m = 0; m < r; ++m) {
        const IntPoly& pm = orth[static_cast<size_t>(m)];
        if (pm.degree() != m || pm.leading() != 1) {
            rep.fail("P_" + std::to_string(m) + " not monic of expected degree " + cell(p));
        }
        if (flip_arg(pm) != (m % 2 == 0 ? pm : -pm)) {
            rep.fail("P_" + std::to_string(m) + " parity " + cell(p));
        }
    }

    IntPoly riley = riley_via_sl2(seq);
    if (riley.degree() != (r - 1) / 2) rep.fail("riley degree " + cell(p));
    {
        Int c0 = riley.coeff(0);
        if (c0 != 1 && c0 != -1) rep.fail("riley constant term not a unit " + cell(p));
    }

    // (a) P_{r-1}(X) = R(X^2)
    if (compose(riley, IntPoly{0, 0, 1}) != top) rep.fail("P_{r-1} = R(X^2) " + cell(p));
    if (riley_from_P(top) != riley) rep.fail("even-coefficient readback of R " + cell(p));

    // (b) chi(t) chi(-t) = R(-t^2)
    IntPoly chi = chi_via_W(seq);
    if (chi.degree() != (r - 1) / 2 || chi.leading() != 1) rep.fail("chi not monic " + cell(p));
    {
        Int c0 = chi.coeff(0);
        if (c0 != 1 && c0 != -1) rep.fail("chi constant term not a unit " + cell(p));
    }
    if (chi * flip_arg(chi) != compose(riley, IntPoly{0, 0, -1})) {
        rep.fail("chi(t)chi(-t) = R(-t^2) " + cell(p));
    }

    // (c) confluent Christoffel-Darboux
    {
        IntPoly lhs;
        for (int m = 0; m <= r - 2; ++m) {
            IntPoly sq = orth[static_cast<size_t>(m)] * orth[static_cast<size_t>(m)];
            int sgn = (m % 2 == 0 ? 1 : -1) * seq.eps(m + 1);
            if (sgn == 1) {
                lhs += sq;
            } else {
                lhs -= sq;
            }
        }
        IntPoly rhs = -(derivative(top) * sub - top * derivative(sub));
        if (lhs != rhs) rep.fail("confluent Christoffel-Darboux " + cell(p));
    }

    // (d) two-variable Christoffel-Darboux at the integer grid
    // (0..r) x (0..r); degrees are below r+1 in each variable, so the
    // grid determines both sides
    {
        std::vector<std::vector<Int>> pv(static_cast<size_t>(r));
        for (int m = 0; m <= r - 1; ++m) {
            pv[static_cast<size_t>(m)].resize(static_cast<size_t>(r) + 1);
            for (int x = 0; x <= r; ++x) {
                pv[static_cast<size_t>(m)][static_cast<size_t>(x)] =
                    orth[static_cast<size_t>(m)](Int(x));
            }
        }
        bool bad = false;
        for (int x = 0; x <= r && !bad; ++x) {
            for (int y = 0; y <= r; ++y) {
                Int lhs(0);
                for (int m = 0; m <= r - 2; ++m) {
                    Int term = pv[static_cast<size_t>(m)][static_cast<size_t>(x)] *
                               pv[static_cast<size_t>(m)][static_cast<size_t>(y)];
                    int sgn = (m % 2 == 0 ? 1 : -1) * seq.eps(m + 1);
                    if (sgn == 1) {
                        lhs += term;
                    } else {
                        lhs -= term;
                    }
                }
                lhs *= Int(x - y);
                Int rhs = -(pv[static_cast<size_t>(r) - 1][static_cast<size_t>(x)] *
                                pv[static_cast<size_t>(r) - 2][static_cast<size_t>(y)] -
                            pv[static_cast<size_t>(r) - 1][static_cast<size_t>(y)] *
                                pv[static_cast<size_t>(r) - 2][static_cast<size_t>(x)]);
                if (lhs != rhs) {
                    rep.fail("two-variable Christoffel-Darboux " + cell(p));
                    bad = true;
                    break;
                }
            }
        }
    }

    // (e) P_{r-1} agrees mod 2 with the all-plus recursion
    {
        IntPoly u_prev{1};
        IntPoly u_cur = IntPoly::identity();
        for (int m = 1; m <= r - 2; ++m) {
            IntPoly next = IntPoly::identity() * u_cur + u_prev;
            u_prev = std::move(u_cur);
            u_cur = std::move(next);
        }
        ModPoly lhs = mod_poly_from(top, 2);
        ModPoly rhs = mod_poly_from(u_cur, 2);
        if (!(lhs == rhs)) rep.fail("mod-2 comparison with the all-plus recursion " + cell(p));
    }

    // continuant route to P_{r-1}
    {
        std::vector<IntPoly> xs;
        xs.reserve(static_cast<size_t>(r) - 1);
        for (int m = 1; m <= r - 1; ++m) xs.push_back(IntPoly::monomial(Int(seq.eps(m)), 1));
        IntPoly k = continuant(xs);
        if (k != top) rep.fail("continuant route to P_{r-1} " + cell(p));
        if (continuant_via_matrices(xs) != k) rep.fail("continuant matrix route " + cell(p));
    }

    // convergent numerators run through the P_{k+1}; the palindromic
    // sign pattern makes the final denominator collapse to P_{r-2}
    {
        std::vector<std::pair<IntPoly, IntPoly>> conv = cf_convergents(seq);
        bool ok = conv.size() == static_cast<size_t>(r) - 1;
        for (size_t k = 0; ok && k < conv.size(); ++k) {
            ok = conv[k].first == orth[k + 1];
        }
        if (ok) {
            ok = conv.front().second == orth[0] && conv.back().second == orth[static_cast<size_t>(r) - 2];
        }
        if (!ok) rep.fail("continued-fraction convergents " + cell(p));
    }

    if (poly_gcd(to_rat_poly(top), to_rat_poly(sub)).degree() != 0) {
        rep.fail("top polynomials not coprime " + cell(p));
    }

    // minors of the tridiagonal matrix
    for (int m = 0; m <= r - 1; ++m) {
        if (tridiag_minor(seq, m) != orth[static_cast<size_t>(m)]) {
            rep.fail("tridiagonal minor " + std::to_string(m) + " " + cell(p));
        }
    }

    return rep;
}

CheckReport verify_residue(const Params& p) {
    CheckReport rep;
    SignSeq seq(p);
    const int r = p.r;
    std::vector<IntPoly> orth = orth_polys(seq);
    RatPoly top = to_rat_poly(orth[static_cast<size_t>(r) - 1]);
    RatPoly sub = to_rat_poly(orth[static_cast<size_t>(r) - 2]);
    auto [g, u, v] = poly_ext_gcd(derivative(top), top);
    if (g.degree() != 0) {
        rep.fail("derivative not invertible modulo P_{r-1} " + cell(p));
        return rep;
    }
    FrobAlg full = FrobAlg::build_full(seq);
    for (int m = 0; m <= r - 2; ++m) {
        RatPoly f = to_rat_poly(orth[static_cast<size_t>(m)]);
        RatPoly prod = divrem(divrem(sub * f, top).second * u, top).second;
        std::vector<Rat> a = decompose_in_orth_basis(orth, prod);
        Rat trace_route(0);
        for (int k = 0; k < full.dim(); ++k) {
            trace_route += a[static_cast<size_t>(k)] * Rat(static_cast<long>(full.trace_basis(k)));
        }
        Rat expected(m == 0 ? 1 : 0);
        if (trace_route != expected) {
            rep.fail("residue counit of P_" + std::to_string(m) + " " + cell(p));
        }
    }
    // even-part variant on the power basis
    for (int k = 0; k < (r - 1) / 2; ++k) {
        if (!residue_crosscheck_so3(seq, RatPoly::monomial(Rat(1), k))) {
            rep.fail("even-part residue counit of t^" + std::to_string(k) + " " + cell(p));
        }
    }
    if (!omega_plus_consistent(seq)) rep.fail("handle element routes disagree " + cell(p));
    return rep;
}

CheckReport verify_signatures(const Params& p, std::uint64_t seed) {
    CheckReport rep;
    SignSeq seq(p);
    int diag = sig_eta_plus(seq);
    if (knot_signature(seq) != 2 * diag) rep.fail("knot signature halving " + cell(p));

    FrobAlg full = FrobAlg::build_full(seq);
    FrobAlg even = FrobAlg::build_even(full);
    if (sig_eta_plus_via_trace_form(even) != diag) {
        rep.fail("trace-form route to the pairing signature " + cell(p));
    }
    AlgElement omega = even.omega();
    SignatureResult direct = signature_trace_form(even, omega);
    if (direct.degenerate || direct.signature != diag) {
        rep.fail("signature of the handle element trace form " + cell(p));
    }

    AnalysisReport rep_a = analyze(p, seed);
    SignatureResult unit_form = signature_trace_form(even, even.unit());
    if (unit_form.degenerate || unit_form.signature != rep_a.r1) {
        rep.fail("trace form of the unit vs real embeddings " + cell(p));
    }
    if (std::abs(rep_a.sig_eta_plus) > rep_a.r1) rep.fail("signature bound " + cell(p));
    return rep;
}

CheckReport verify_pair(const Params& p, std::uint64_t seed, bool with_residue) {
    CheckReport rep;
    rep.merge(verify_algebra(p));
    rep.merge(verify_poly_identities(p));
    rep.merge(verify_signatures(p, seed));
    if (with_residue) rep.merge(verify_residue(p));
    return rep;
}

}  // namespace vr
