#include "vr/riley.hpp"

namespace vr {

std::vector<IntPoly> orth_polys(const SignSeq& seq) {
    const int r = seq.params().r;
    std::vector<IntPoly> p;
    p.reserve(static_cast<size_t>(r));
    p.push_back(IntPoly{1});
    p.push_back(IntPoly::identity());
    for (int n = 1; n + 1 <= r - 1; ++n) {
        IntPoly next = IntPoly::identity() * p[static_cast<size_t>(n)];
        int c = seq.eps(n) * seq.eps(n + 1);
        if (c == 1) {
            next += p[static_cast<size_t>(n) - 1];
        } else {
            next -= p[static_cast<size_t>(n) - 1];
        }
        p.push_back(std::move(next));
    }
    return p;
}

IntMat tridiag_matrix(const SignSeq& seq) {
    const int n = seq.params().r - 1;
    IntMat m = IntMat::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        m(i + 1, i) = 1;
        m(i, i + 1) = -seq.eps(i + 1) * seq.eps(i + 2);
    }
    return m;
}

IntPoly tridiag_minor(const SignSeq& seq, int n) {
    if (n < 0 || n > seq.params().r - 1) throw std::out_of_range("minor size out of range");
    IntPoly prev{1};
    IntPoly cur = IntPoly::identity();
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        // d_{k+1} = X d_k - (superdiag * subdiag) d_{k-1}
        IntPoly next = IntPoly::identity() * cur;
        int c = seq.eps(k) * seq.eps(k + 1);
        if (c == 1) {
            next += prev;
        } else {
            next -= prev;
        }
        prev = cur;
        cur = next;
    }
    return cur;
}

IntPoly continuant(const std::vector<IntPoly>& xs) {
    // K(x_m..x_n) by downward recursion on the left index
    IntPoly k2{1};  // K of the empty tail
    IntPoly k1;     // K one past the end
    if (xs.empty()) return k2;
    k1 = xs.back();
    for (size_t i = xs.size() - 1; i-- > 0;) {
        IntPoly k0 = xs[i] * k1 + k2;
        k2 = std::move(k1);
        k1 = std::move(k0);
    }
    return k1;
}

IntPoly continuant_via_matrices(const std::vector<IntPoly>& xs) {
    SL2Poly acc = SL2Poly::one();
    for (const IntPoly& x : xs) {
        SL2Poly m;
        m.e = {x, IntPoly{1}, IntPoly{1}, IntPoly{}};
        acc = acc * m;
    }
    return acc.e[0];
}

std::vector<std::pair<IntPoly, IntPoly>> cf_convergents(const SignSeq& seq) {
    const int r = seq.params().r;
    std::vector<std::pair<IntPoly, IntPoly>> out;
    IntPoly h2{1}, k2;      // h_{-1} = 1, k_{-1} = 0
    IntPoly h1 = IntPoly::identity(), k1{1};  // depth-0 convergent X/1
    out.emplace_back(h1, k1);
    for (int n = 1; n <= r - 2; ++n) {
        int b = seq.eps(n) * seq.eps(n + 1);
        IntPoly hn = IntPoly::identity() * h1 + (b == 1 ? h2 : -h2);
        IntPoly kn = IntPoly::identity() * k1 + (b == 1 ? k2 : -k2);
        out.emplace_back(hn, kn);
        h2 = std::move(h1);
        h1 = std::move(hn);
        k2 = std::move(k1);
        k1 = std::move(kn);
    }
    return out;
}

static SL2Poly parabolic_u(int e) {
    // [[1, e],[0, 1]]
    SL2Poly m = SL2Poly::one();
    m.e[1] = IntPoly{e};
    return m;
}

static SL2Poly parabolic_v(int e) {
    // [[1, 0],[e*x, 1]]
    SL2Poly m = SL2Poly::one();
    m.e[2] = IntPoly::monomial(Int(e), 1);
    return m;
}

IntPoly riley_via_sl2(const SignSeq& seq) {
    const int r = seq.params().r;
    SL2Poly acc = SL2Poly::one();
    for (int n = 1; n <= r - 1; ++n) {
        acc = acc * (n % 2 == 1 ? parabolic_u(seq.eps(n)) : parabolic_v(seq.eps(n)));
    }
    IntPoly raw = acc.e[0];
    if (raw.degree() != (r - 1) / 2 || raw.leading() != 1) {
        throw std::logic_error("riley word product is not monic of the expected degree");
    }
    return raw;
}

IntPoly riley_from_P(const IntPoly& p) {
    std::vector<Int> c;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i % 2 == 1) {
            if (sign_of(p.coeff(i)) != 0) {
                throw std::domain_error("polynomial is not even");
            }
        } else {
            c.push_back(p.coeff(i));
        }
    }
    return IntPoly(std::move(c));
}

IntMat w_matrix(const SignSeq& seq) {
    const int r = seq.params().r;
    const int m = (r - 1) / 2;
    IntMat w = IntMat::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        w(i, m - 1 - i) = seq.eps(r - 1 - 2 * i);
        if (i >= 1) w(i, m - i) = -seq.eps(r - 2 * i);
    }
    return w;
}

IntPoly chi_via_W(const SignSeq& seq) {
    IntMat w = w_matrix(seq);
    return char_poly<Int>(w);
}

}  // namespace vr
