// Acceptance suite: runs the project's ten acceptance criteria at their
// pinned tolerances and prints one pass/fail line per criterion. The
// exit code is the number of failed criteria.

#include "vr/analysis.hpp"
#include "vr/cli.hpp"
#include "vr/routh.hpp"
#include "vr/sturm.hpp"
#include "vr/tqft.hpp"
#include "vr/verify.hpp"

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace vr;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string note;
};

std::vector<Params> pairs_up_to(int rmax) {
    std::vector<Params> out;
    for (int r = 3; r <= rmax; r += 2) {
        for (int s = 1; s < r; s += 2) {
            if (valid_params(r, s)) out.emplace_back(r, s);
        }
    }
    return out;
}

// printed signature table for r <= 23: cell -> (signature, simple)
const std::map<std::pair<int, int>, std::pair<int, bool>> kFigureCells = {
    {{3, 1}, {1, true}},
    {{5, 1}, {2, true}},   {{5, 3}, {0, true}},
    {{7, 1}, {3, true}},   {{7, 3}, {1, true}},   {{7, 5}, {1, true}},
    {{9, 1}, {4, false}},  {{9, 5}, {0, true}},   {{9, 7}, {0, true}},
    {{11, 1}, {5, true}},  {{11, 3}, {1, true}},  {{11, 5}, {1, true}},
    {{11, 7}, {-1, true}}, {{11, 9}, {1, true}},
    {{13, 1}, {6, true}},  {{13, 3}, {2, true}},  {{13, 5}, {0, true}},
    {{13, 7}, {0, true}},  {{13, 9}, {2, true}},  {{13, 11}, {0, true}},
    {{15, 1}, {7, false}}, {{15, 7}, {1, true}},  {{15, 11}, {1, false}},
    {{15, 13}, {1, true}},
    {{17, 1}, {8, true}},  {{17, 3}, {2, true}},  {{17, 5}, {2, true}},
    {{17, 7}, {2, true}},  {{17, 9}, {0, true}},  {{17, 11}, {-2, true}},
    {{17, 13}, {0, true}}, {{17, 15}, {0, true}},
    {{19, 1}, {9, true}},  {{19, 3}, {3, true}},  {{19, 5}, {1, true}},
    {{19, 7}, {1, true}},  {{19, 9}, {1, true}},  {{19, 11}, {1, true}},
    {{19, 13}, {3, true}}, {{19, 15}, {1, true}}, {{19, 17}, {1, true}},
    {{21, 1}, {10, false}}, {{21, 5}, {2, true}}, {{21, 11}, {0, true}},
    {{21, 13}, {0, false}}, {{21, 17}, {2, true}}, {{21, 19}, {0, true}},
    {{23, 1}, {11, true}}, {{23, 3}, {3, true}},  {{23, 5}, {1, true}},
    {{23, 7}, {1, true}},  {{23, 9}, {-1, true}}, {{23, 11}, {1, true}},
    {{23, 13}, {-1, true}}, {{23, 15}, {-3, true}}, {{23, 17}, {1, true}},
    {{23, 19}, {1, true}}, {{23, 21}, {1, true}},
};

// independent check of one signature value through floating sines
int float_half_signature(int r, int s) {
    const double pi = std::acos(-1.0);
    int sum = 0;
    for (int n = 1; n <= r - 1; n += 2) {
        sum += std::sin(pi * n * s / r) > 0 ? 1 : -1;
    }
    return sum;
}

Outcome criterion_figure_table() {
    Outcome out;
    int checked = 0;
    for (const auto& [cell, expect] : kFigureCells) {
        AnalysisReport rep = analyze(Params(cell.first, cell.second));
        if (rep.sig_eta_plus != expect.first || rep.simple != expect.second) {
            out.pass = false;
            std::ostringstream why;
            why << " (" << cell.first << "," << cell.second << "): computed sig "
                << rep.sig_eta_plus << " vs printed " << expect.first;
            int indep = float_half_signature(cell.first, cell.second);
            if (indep == rep.sig_eta_plus) {
                why << " [floating sine signs confirm " << indep
                    << "; printed cell contradicts its own defining formula"
                    << " - see decisions ledger]";
            } else {
                why << " [floating route gives " << indep << "]";
            }
            out.note += why.str();
        }
        ++checked;
    }
    out.note = std::to_string(checked) + " filled cells;" + out.note;
    if (out.pass) out.note = std::to_string(checked) + " filled cells all match";
    return out;
}

Outcome criterion_intro_algebras() {
    Outcome out;
    FrobAlg a51 = FrobAlg::build_even(FrobAlg::build_full(SignSeq{Params(5, 1)}));
    FrobAlg a53 = FrobAlg::build_even(FrobAlg::build_full(SignSeq{Params(5, 3)}));
    RatPoly mp51 = a51.min_poly(a51.basis(1));
    RatPoly mp53 = a53.min_poly(a53.basis(1));

    bool ok53 = mp53 == RatPoly{1, 1, 1};  // x^2 + x + 1
    bool ok51_as_stated = mp51 == RatPoly{-1, -1, 1};  // x^2 - x - 1
    bool ok51_negated = a51.min_poly(-a51.basis(1)) == RatPoly{-1, -1, 1};

    out.pass = ok53 && ok51_as_stated;
    std::ostringstream note;
    note << "(5,3) min_poly(e_2) = " << to_string(mp53, "x") << (ok53 ? " [ok]" : " [WRONG]");
    note << "; (5,1) min_poly(e_2) = " << to_string(mp51, "x");
    if (!ok51_as_stated) {
        note << " != x^2 - x - 1 as stated; the sign-corrected generator -e_2 gives "
             << (ok51_negated ? "x^2 - x - 1 [holds]" : "[also fails]")
             << " (see decisions ledger)";
    }
    out.note = note.str();
    return out;
}

Outcome criterion_identity_suite() {
    Outcome out;
    std::vector<Params> work = pairs_up_to(61);
    for (const Params& p : work) {
        CheckReport rep;
        rep.merge(verify_algebra(p));
        rep.merge(verify_poly_identities(p));
        if (!rep.ok()) {
            out.pass = false;
            out.note += " (" + std::to_string(p.r) + "," + std::to_string(p.s) + "): " +
                        rep.failures.front();
        }
    }
    if (out.pass) out.note = std::to_string(work.size()) + " pairs, all identities exact";
    return out;
}

Outcome criterion_semisimplicity() {
    Outcome out;
    int count = 0;
    for (const Params& p : pairs_up_to(61)) {
        SignSeq seq(p);
        RatPoly riley = to_rat_poly(riley_via_sl2(seq));
        if (!disc_odd_check(riley) || !is_squarefree(riley)) {
            out.pass = false;
            out.note += " failure at (" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
        }
        ++count;
    }
    if (out.pass) out.note = "disc(R) odd and R squarefree on " + std::to_string(count) + " pairs";
    return out;
}

Outcome criterion_opposite_family() {
    Outcome out;
    for (int r = 5; r <= 61; r += 2) {
        Params p(r, r - 2);
        SignSeq seq(p);
        IntMat w = w_matrix(seq);
        Int tr(0);
        for (int i = 0; i < w.rows(); ++i) tr += w(i, i);
        RatPoly chi = to_rat_poly(chi_via_W(seq));
        bool ok = tr == 1;
        ok = ok && factor_over_Q(chi).is_irreducible();
        StabilityResult st = routh_positive_real_parts(chi);
        ok = ok && st.all_positive && !st.imaginary_axis;
        int expected_real = (r % 4 == 1) ? 0 : 1;
        ok = ok && sturm_real_roots(chi) == expected_real;
        const int m = chi.degree();
        for (int k = 0; k <= m; ++k) {
            int want = (k % 2 == 0) ? 1 : -1;
            if (sign_of(chi.coeff(m - k)) != want) ok = false;
        }
        if (!ok) {
            out.pass = false;
            out.note += " failure at r=" + std::to_string(r);
        }
    }
    if (out.pass) out.note = "trace, irreducibility, root location, and sign pattern on 29 cases";
    return out;
}

Outcome criterion_verlinde() {
    Outcome out;
    const std::map<int, long> closed_g2 = {{5, 20}, {7, 56}, {9, 120}, {11, 220}};
    for (int r : {5, 7, 9, 11}) {
        for (int g : {2, 3}) {
            VerlindeCheck c = verlinde_crosscheck(r, g);
            if (!c.agree) {
                out.pass = false;
                out.note += " float disagreement at r=" + std::to_string(r) +
                            " g=" + std::to_string(g);
            }
            if (g == 2 && c.exact != Rat(closed_g2.at(r))) {
                out.pass = false;
                out.note += " closed-form mismatch at r=" + std::to_string(r);
            }
        }
    }
    if (out.pass) out.note = "exact traces match the sine sums to 1e-9 (g=2 values closed-form)";
    return out;
}

Outcome criterion_residue() {
    Outcome out;
    int count = 0;
    for (const Params& p : pairs_up_to(23)) {
        CheckReport rep = verify_residue(p);
        if (!rep.ok()) {
            out.pass = false;
            out.note += " " + rep.failures.front();
        }
        ++count;
    }
    if (out.pass) out.note = "eps(P_n) = [n = 0] on " + std::to_string(count) + " pairs";
    return out;
}

Outcome criterion_inequality() {
    Outcome out;
    for (const Params& p : pairs_up_to(37)) {
        AnalysisReport rep = analyze(p);
        if (std::abs(rep.sig_eta_plus) > rep.r1) {
            out.pass = false;
            out.note += " bound violated at (" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
        }
        if (p.r <= 23 && rep.inequality_strict) {
            out.pass = false;
            out.note += " unexpected strict cell at (" + std::to_string(p.r) + "," +
                        std::to_string(p.s) + ")";
        }
    }
    std::vector<std::string> strict;
    for (int r = 39; r <= 61; r += 2) {
        for (int s = 1; s < r; s += 2) {
            if (!valid_params(r, s)) continue;
            AnalysisReport rep = analyze(Params(r, s));
            if (rep.inequality_strict) {
                strict.push_back("(" + std::to_string(r) + "," + std::to_string(s) + ")");
            }
        }
    }
    if (strict.empty()) {
        out.pass = false;
        out.note += " no strict cell found in 39..61";
    } else if (out.pass) {
        out.note = "bound holds to 37, equality to 23; strict cells:";
        for (const std::string& s : strict) out.note += " " + s;
    }
    return out;
}

Outcome criterion_involution() {
    Outcome out;
    int compared = 0;
    for (const Params& p : pairs_up_to(23)) {
        InverseParam inv = s_star(p);
        if (!inv.odd) continue;
        Fingerprint a = involution_fingerprint(p);
        Fingerprint b = involution_fingerprint(Params(p.r, inv.s_star));
        if (!compare_fingerprints(a, b)) {
            out.pass = false;
            out.note += " mismatch at (" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
        }
        ++compared;
    }
    if (out.pass) out.note = std::to_string(compared) + " inverse pairs share fingerprints";
    return out;
}

Outcome criterion_property_suites() {
    Outcome out;

    // factorization idempotence over the r <= 23 grid
    for (const Params& p : pairs_up_to(23)) {
        Factorization f = factor_over_Q(to_rat_poly(chi_via_W(SignSeq(p))));
        for (const auto& [g, mult] : f.factors) {
            Factorization again = factor_over_Q(g);
            if (!again.is_irreducible() || again.factors[0].first != g) {
                out.pass = false;
                out.note += " refactoring changed a factor at (" + std::to_string(p.r) + "," +
                            std::to_string(p.s) + ")";
            }
        }
    }

    // Sturm counts against a floating eigenvalue solver
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<long> cdist(-9, 9);
    std::uniform_int_distribution<int> ddist(1, 12);
    int done = 0;
    while (done < 50) {
        int deg = ddist(rng);
        std::vector<Rat> c(static_cast<size_t>(deg) + 1);
        for (auto& v : c) v = Rat(cdist(rng));
        RatPoly f(std::move(c));
        if (f.degree() < 1 || !is_squarefree(f)) continue;
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(f.degree(), f.degree());
        for (int i = 0; i < f.degree(); ++i) {
            comp(i, f.degree() - 1) = -f.coeff(i).get_d() / f.leading().get_d();
            if (i + 1 < f.degree()) comp(i + 1, i) = 1.0;
        }
        Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
        int floats = 0;
        for (int i = 0; i < f.degree(); ++i) {
            std::complex<double> z = es.eigenvalues()(i);
            if (std::abs(z.imag()) < 1e-8 * std::max(1.0, std::abs(z.real()))) ++floats;
        }
        if (sturm_real_roots(f) != floats) {
            out.pass = false;
            out.note += " sturm/float disagreement";
        }
        ++done;
    }

    // planted signatures recovered after congruence scrambling
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
        RatMat s = RatMat::Identity(n, n);
        for (int k = 0; k < 12; ++k) {
            int i = static_cast<int>(rng() % n);
            int j = static_cast<int>(rng() % n);
            if (i == j) continue;
            RatMat e = RatMat::Identity(n, n);
            e(i, j) = Rat(edist(rng));
            s = s * e;
        }
        SignatureResult res = signature_of_symmetric(RatMat(s.transpose() * d * s));
        if (res.degenerate || res.signature != planted) {
            out.pass = false;
            out.note += " planted signature lost";
        }
    }

    if (out.pass) out.note = "idempotence, 50 sturm/float agreements, 20 planted signatures";
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"figure-1 table reproduction", criterion_figure_table},
        {"intro algebras at (5,1)/(5,3)", criterion_intro_algebras},
        {"identity suite r <= 61", criterion_identity_suite},
        {"semi-simplicity r <= 61", criterion_semisimplicity},
        {"s = r-2 family r <= 61", criterion_opposite_family},
        {"verlinde cross-check", criterion_verlinde},
        {"residue formula r <= 23", criterion_residue},
        {"signature inequality + strict cells", criterion_inequality},
        {"involution fingerprints r <= 23", criterion_involution},
        {"property suites", criterion_property_suites},
    };

    int failed = 0;
    int index = 0;
    for (const Entry& e : entries) {
        ++index;
        auto t0 = Clock::now();
        Outcome out = e.fn();
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (!out.pass) ++failed;
        std::cout << "[" << std::setw(2) << index << "] " << std::left << std::setw(38) << e.name
                  << std::right << (out.pass ? " PASS " : " FAIL ") << std::fixed
                  << std::setprecision(1) << "(" << secs << "s)";
        if (!out.note.empty()) std::cout << "  " << out.note;
        std::cout << "\n";
        std::cout.flush();
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed")
              << "\n";
    return failed;
}
