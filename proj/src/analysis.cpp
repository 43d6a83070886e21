#include "vr/analysis.hpp"

#include "vr/routh.hpp"
#include "vr/sturm.hpp"

#include <Eigen/LU>

#include <algorithm>

namespace vr {

int sig_eta_plus(const SignSeq& seq) {
    int sum = 0;
    for (int n = 1; n < seq.params().r; n += 2) sum += seq.eps(n);
    return sum;
}

int sig_eta_full_diag(const SignSeq& seq) {
    int sum = 0;
    for (int i = 0; i <= seq.params().r - 2; ++i) {
        sum += (i % 2 == 0 ? 1 : -1) * seq.eps(i + 1);
    }
    return sum;
}

SignatureResult signature_trace_form(const FrobAlg& alg, const AlgElement& t) {
    const int n = alg.dim();
    RatMat gram(n, n);
    std::vector<RatVec> tj(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) tj[static_cast<size_t>(j)] = alg.mult(t.coords, alg.basis(j).coords);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            RatVec prod = alg.mult(alg.basis(i).coords, tj[static_cast<size_t>(j)]);
            Rat tr = alg.trace_mult(prod);
            gram(i, j) = tr;
            gram(j, i) = tr;
        }
    }
    return signature_of_symmetric(std::move(gram));
}

AlgElement invert(const FrobAlg& alg, const AlgElement& a) {
    RatMat m = alg.mult_matrix(a.coords);
    Eigen::FullPivLU<RatMat> lu(m);
    if (!lu.isInvertible()) throw std::domain_error("element is not invertible");
    RatVec unit = RatVec::Zero(alg.dim());
    unit(0) = Rat(1);
    RatVec z = lu.solve(unit);
    return alg.element(std::move(z));
}

int sig_eta_plus_via_trace_form(const FrobAlg& even_alg) {
    AlgElement omega = even_alg.omega();
    AlgElement inv = invert(even_alg, omega);
    SignatureResult sr = signature_trace_form(even_alg, inv);
    if (sr.degenerate) throw std::logic_error("pairing trace form is degenerate");
    return sr.signature;
}

namespace {

std::vector<std::pair<Int, int>> factor_integer(Int n) {
    std::vector<std::pair<Int, int>> out;
    if (sign_of(n) < 0) n = -n;
    if (n <= 1) return out;
    std::vector<Int> stack{n};
    std::map<Int, int> primes;
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
            primes[m] += 1;
            continue;
        }
        // small trial division first
        bool split = false;
        for (unsigned long d = 2; d < 100000 && Int(d) * d <= m; d += (d == 2 ? 1 : 2)) {
            if (m % d == 0) {
                stack.push_back(Int(d));
                stack.push_back(m / d);
                split = true;
                break;
            }
        }
        if (split) continue;
        // Pollard rho (Brent variant) with deterministic restarts
        Int d = m;
        for (unsigned long c = 1; d == m || d == 1; ++c) {
            Int x(2), y(2), diff, g(1);
            while (g == 1) {
                x = (x * x + c) % m;
                y = (y * y + c) % m;
                y = (y * y + c) % m;
                diff = x > y ? x - y : y - x;
                if (sign_of(diff) == 0) break;  // cycle, retry with next c
                g = gcd_int(diff, m);
            }
            d = g;
        }
        stack.push_back(d);
        stack.push_back(m / d);
    }
    for (const auto& [p, e] : primes) out.emplace_back(p, e);
    return out;
}

}  // namespace

Int squarefree_kernel(const Int& n) {
    if (sign_of(n) == 0) throw std::domain_error("square class of zero");
    Int kernel(sign_of(n) < 0 ? -1 : 1);
    for (const auto& [p, e] : factor_integer(n)) {
        if (e % 2 == 1) kernel *= p;
    }
    return kernel;
}

AnalysisReport analyze(const Params& p, std::uint64_t seed) {
    SignSeq seq(p);
    AnalysisReport rep;
    rep.r = p.r;
    rep.s = p.s;
    rep.dim_plus = (p.r - 1) / 2;
    rep.riley = riley_via_sl2(seq);
    rep.chi = chi_via_W(seq);
    Factorization fac = factor_over_Q(to_rat_poly(rep.chi), seed);
    rep.simple = fac.is_irreducible();
    rep.r1 = 0;
    for (const auto& [g, mult] : fac.factors) {
        FactorInfo fi;
        fi.poly = g;
        fi.multiplicity = mult;
        fi.real_roots = sturm_real_roots(g);
        fi.disc = discriminant(g);
        rep.r1 += fi.real_roots * mult;
        for (int m = 0; m < mult; ++m) rep.factor_degrees.push_back(g.degree());
        rep.factors.push_back(std::move(fi));
    }
    std::sort(rep.factor_degrees.begin(), rep.factor_degrees.end());
    rep.sig_eta_plus = sig_eta_plus(seq);
    rep.knot_sig = knot_signature(seq);
    rep.inequality_strict = std::abs(rep.sig_eta_plus) < rep.r1;
    if (std::abs(rep.sig_eta_plus) > rep.r1) {
        throw std::logic_error("signature bound violated; construction bug");
    }
    rep.disc_odd = disc_odd_check(to_rat_poly(rep.riley));
    rep.eta_full_diag_signature = sig_eta_full_diag(seq);
    return rep;
}

Fingerprint involution_fingerprint(const Params& p, std::uint64_t seed) {
    AnalysisReport rep = analyze(p, seed);
    Fingerprint fp;
    for (const FactorInfo& fi : rep.factors) {
        Int kernel = squarefree_kernel(fi.disc.get_num() * fi.disc.get_den());
        for (int m = 0; m < fi.multiplicity; ++m) {
            fp.items.emplace_back(fi.poly.degree(), fi.real_roots, kernel);
        }
    }
    std::sort(fp.items.begin(), fp.items.end());
    return fp;
}

bool compare_fingerprints(const Fingerprint& a, const Fingerprint& b) {
    return a.items == b.items;
}

}  // namespace vr
