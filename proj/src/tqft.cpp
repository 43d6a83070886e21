#include "vr/tqft.hpp"

#include "vr/factor.hpp"

#include <cmath>

namespace vr {

Rat genus_invariant(const SignSeq& seq, int g, bool so3) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (g == 0) return Rat(1);
    FrobAlg full = FrobAlg::build_full(seq);
    if (!so3) {
        IntMat m = full.mult_matrix_int(full.omega_int());
        IntMat p = IntMat::Identity(full.dim(), full.dim());
        for (int i = 0; i < g - 1; ++i) p = (p * m).eval();
        Int t(0);
        for (int i = 0; i < p.rows(); ++i) t += p(i, i);
        return Rat(t);
    }
    FrobAlg even = FrobAlg::build_even(full);
    IntMat m = even.mult_matrix_int(even.omega_int());
    IntMat p = IntMat::Identity(even.dim(), even.dim());
    for (int i = 0; i < g - 1; ++i) p = (p * m).eval();
    Int t(0);
    for (int i = 0; i < p.rows(); ++i) t += p(i, i);
    return Rat(t);
}

Rat surface_signature(const SignSeq& seq, const SurfaceSpec& spec) {
    if (spec.genus < 0) throw std::invalid_argument("genus must be nonnegative");
    const int r = seq.params().r;
    for (int c : spec.colors) {
        if (c < 0 || c > r - 2) throw std::out_of_range("color out of range");
        if (spec.so3 && c % 2 != 0) throw std::invalid_argument("odd color with the so3 flag");
    }
    FrobAlg full = FrobAlg::build_full(seq);
    const FrobAlg alg = spec.so3 ? FrobAlg::build_even(full) : full;
    AlgElement acc = alg.unit();
    AlgElement omega = alg.omega();
    for (int i = 0; i < spec.genus; ++i) acc = acc * omega;
    for (int c : spec.colors) {
        int position = spec.so3 ? c / 2 : c;
        acc = acc * alg.basis(position);
    }
    return acc.epsilon();
}

VerlindeCheck verlinde_crosscheck(int r, int g) {
    if (g < 2) throw std::invalid_argument("cross-check needs genus >= 2");
    SignSeq seq{Params(r, 1)};
    VerlindeCheck out;
    out.exact = genus_invariant(seq, g, false);
    const double pi = std::acos(-1.0);
    double sum = 0.0;
    for (int k = 1; k <= r - 1; ++k) {
        sum += std::pow(std::sin(k * pi / r), 2.0 - 2.0 * g);
    }
    out.approx = std::pow(r / 2.0, g - 1.0) * sum;
    double exact_d = out.exact.get_d();
    out.agree = std::abs(exact_d - out.approx) / std::max(1.0, std::abs(exact_d)) < 1e-9;
    return out;
}

std::vector<Rat> decompose_in_orth_basis(const std::vector<IntPoly>& basis, const RatPoly& q) {
    RatPoly rest = q;
    std::vector<Rat> coeffs(basis.size(), Rat(0));
    if (rest.degree() >= static_cast<int>(basis.size())) {
        throw std::invalid_argument("degree too large for the basis");
    }
    for (int n = rest.degree(); n >= 0; n = rest.degree()) {
        if (rest.is_zero()) break;
        Rat c = rest.coeff(n);  // basis polynomial n is monic of degree n
        coeffs[static_cast<size_t>(n)] = c;
        rest -= c * to_rat_poly(basis[static_cast<size_t>(n)]);
    }
    return coeffs;
}

bool residue_crosscheck(const SignSeq& seq, const RatPoly& f) {
    const int r = seq.params().r;
    if (f.degree() >= r - 1) throw std::invalid_argument("degree must be below r-1");
    std::vector<IntPoly> orth = orth_polys(seq);
    RatPoly big = to_rat_poly(orth[static_cast<size_t>(r) - 1]);
    RatPoly small = to_rat_poly(orth[static_cast<size_t>(r) - 2]);
    RatPoly dbig = derivative(big);
    auto [g, u, v] = poly_ext_gcd(dbig, big);
    if (g.degree() != 0) throw std::domain_error("derivative not invertible modulo the top polynomial");
    // u / g is the inverse of P'_{r-1} mod P_{r-1}; g is the constant 1
    RatPoly inv = u;
    RatPoly prod = divrem(divrem(small * f, big).second * inv, big).second;
    std::vector<Rat> a = decompose_in_orth_basis(orth, prod);
    FrobAlg full = FrobAlg::build_full(seq);
    Rat trace_route(0);
    for (int n = 0; n < full.dim(); ++n) {
        trace_route += a[static_cast<size_t>(n)] * Rat(static_cast<long>(full.trace_basis(n)));
    }
    std::vector<Rat> b = decompose_in_orth_basis(orth, f);
    return trace_route == b[0];
}

bool residue_crosscheck_so3(const SignSeq& seq, const RatPoly& f) {
    const int r = seq.params().r;
    const int m = (r - 1) / 2;
    if (f.degree() >= m) throw std::invalid_argument("degree must be below (r-1)/2");
    RatPoly chi = to_rat_poly(chi_via_W(seq));
    RatPoly a = divrem(derivative(chi) * flip_arg(chi), chi).second;
    auto [g, u, v] = poly_ext_gcd(a, chi);
    if (g.degree() != 0) throw std::domain_error("chi'(t)chi(-t) not invertible modulo chi");
    RatPoly q = divrem(f * u, chi).second;
    FrobAlg full = FrobAlg::build_full(seq);
    FrobAlg even = FrobAlg::build_even(full);
    AlgElement w = r >= 5 ? even.even_w() : Rat(seq.eps(2)) * even.basis(0);
    AlgElement lhs = even.evaluate(q, w);
    Rat trace_route = Rat(-2) * even.trace_mult(lhs.coords);
    Rat direct = even.evaluate(f, w).epsilon();
    return trace_route == direct;
}

bool omega_plus_consistent(const SignSeq& seq) {
    const int r = seq.params().r;
    FrobAlg full = FrobAlg::build_full(seq);
    FrobAlg even = FrobAlg::build_even(full);
    AlgElement omega_plus = even.omega();

    // half of the embedded full handle element
    std::vector<long long> om = full.omega_int();
    for (int i = 0; i < full.dim(); ++i) {
        if (i % 2 == 1 && om[static_cast<size_t>(i)] != 0) return false;
    }
    RatVec half = RatVec::Zero(even.dim());
    for (int i = 0; i < even.dim(); ++i) {
        half(i) = Rat(static_cast<long>(om[static_cast<size_t>(2 * i)]), 2);
        half(i).canonicalize();
    }
    if (even.element(half) == omega_plus) {
        // fine
    } else {
        return false;
    }

    AlgElement w = r >= 5 ? even.even_w() : Rat(seq.eps(2)) * even.basis(0);

    // w R'(-w^2)
    RatPoly riley = to_rat_poly(riley_via_sl2(seq));
    RatPoly route3 = RatPoly::identity() * compose(derivative(riley), RatPoly{0, 0, -1});
    if (!(even.evaluate(route3, w) == omega_plus)) return false;

    // -1/2 chi'(w) chi(-w)
    RatPoly chi = to_rat_poly(chi_via_W(seq));
    RatPoly route4 = derivative(chi) * flip_arg(chi) * Rat(-1, 2);
    if (!(even.evaluate(route4, w) == omega_plus)) return false;
    return true;
}

}  // namespace vr
