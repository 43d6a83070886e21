#include "vr/sturm.hpp"

namespace vr {

namespace {

// positive content only, so signs survive
IntPoly strip_positive_content(const IntPoly& f) {
    if (f.is_zero()) return f;
    Int g = content(f);
    std::vector<Int> r;
    r.reserve(f.coeffs().size());
    for (const Int& v : f.coeffs()) r.push_back(v / g);
    return IntPoly(std::move(r));
}

// remainder scaled by an even power of lc(b): equals rem(a,b) times a
// positive constant
IntPoly even_scaled_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = pseudo_rem(a, b);
    int e = a.degree() - b.degree() + 1;
    if (e > 0 && e % 2 == 1) r = r * b.leading();
    return r;
}

int sign_at_plus_inf(const IntPoly& f) { return sign_of(f.leading()); }

int sign_at_minus_inf(const IntPoly& f) {
    int s = sign_of(f.leading());
    return f.degree() % 2 == 0 ? s : -s;
}

int variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int sturm_real_roots(const RatPoly& f) {
    if (f.degree() < 1) throw std::domain_error("root counting requires degree >= 1");
    if (!is_squarefree(f)) throw std::domain_error("root counting requires a squarefree input");
    IntPoly cur = strip_positive_content(clear_denominators(f).first);
    IntPoly nxt = strip_positive_content(derivative(cur));
    std::vector<int> at_minus{sign_at_minus_inf(cur)};
    std::vector<int> at_plus{sign_at_plus_inf(cur)};
    while (!nxt.is_zero()) {
        at_minus.push_back(sign_at_minus_inf(nxt));
        at_plus.push_back(sign_at_plus_inf(nxt));
        IntPoly r = even_scaled_rem(cur, nxt);
        cur = nxt;
        nxt = strip_positive_content(-r);
    }
    return variations(at_minus) - variations(at_plus);
}

}  // namespace vr
