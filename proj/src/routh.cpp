#include "vr/routh.hpp"

#include "vr/sturm.hpp"

namespace vr {

namespace {

// real and imaginary parts of f(iy) as real polynomials in y
std::pair<RatPoly, RatPoly> split_on_imaginary_axis(const RatPoly& f) {
    std::vector<Rat> a(static_cast<size_t>(f.degree()) + 1, Rat(0));
    std::vector<Rat> b(static_cast<size_t>(f.degree()) + 1, Rat(0));
    for (int k = 0; k <= f.degree(); ++k) {
        Rat c = f.coeff(k);
        switch (k % 4) {
            case 0: a[static_cast<size_t>(k)] = c; break;
            case 1: b[static_cast<size_t>(k)] = c; break;
            case 2: a[static_cast<size_t>(k)] = -c; break;
            case 3: b[static_cast<size_t>(k)] = -c; break;
        }
    }
    return {RatPoly(std::move(a)), RatPoly(std::move(b))};
}

bool has_imaginary_axis_root(const RatPoly& f) {
    auto [a, b] = split_on_imaginary_axis(f);
    RatPoly d = poly_gcd(a, b);
    if (d.degree() < 1) return false;
    return sturm_real_roots(squarefree_part(d)) > 0;
}

}  // namespace

StabilityResult routh_positive_real_parts(const RatPoly& f) {
    if (f.degree() < 1) throw std::domain_error("stability test requires degree >= 1");
    if (f.leading() != Rat(1)) throw std::domain_error("stability test requires a monic input");
    if (!is_squarefree(f)) throw std::domain_error("stability test requires a squarefree input");

    if (sign_of(f.coeff(0)) == 0) return {false, true};  // root at the origin
    if (has_imaginary_axis_root(f)) return {false, true};

    // a pair z, -z of roots rules out positivity outright (and makes the
    // Routh array terminate prematurely, so handle it first)
    if (poly_gcd(f, flip_arg(f)).degree() >= 1) return {false, false};

    // h has all roots in the open left half plane iff f has them in the
    // open right half plane
    const int n = f.degree();
    RatPoly h = flip_arg(f);
    if (n % 2 == 1) h = h * Rat(-1);  // monic again

    std::vector<Rat> row0, row1;
    for (int k = n; k >= 0; k -= 2) row0.push_back(h.coeff(k));
    for (int k = n - 1; k >= 0; k -= 2) row1.push_back(h.coeff(k));

    if (sign_of(row0[0]) <= 0) return {false, false};
    while (!row1.empty()) {
        if (sign_of(row1[0]) <= 0) return {false, false};
        std::vector<Rat> next;
        size_t len = row0.size() - 1;
        next.reserve(len);
        for (size_t j = 0; j < len; ++j) {
            Rat a1 = j + 1 < row0.size() ? row0[j + 1] : Rat(0);
            Rat b1 = j + 1 < row1.size() ? row1[j + 1] : Rat(0);
            next.push_back((row1[0] * a1 - row0[0] * b1) / row1[0]);
        }
        row0 = std::move(row1);
        row1 = std::move(next);
    }
    return {true, false};
}

}  // namespace vr
