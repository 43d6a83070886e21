#include "vr/matrix.hpp"

namespace vr {

SignatureResult signature_of_symmetric(RatMat g) {
    const int n = static_cast<int>(g.rows());
    if (g.cols() != n) throw std::invalid_argument("signature of non-square matrix");
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g(i, j) != g(j, i)) throw std::invalid_argument("matrix not symmetric");
        }
    }
    std::vector<int> active(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) active[static_cast<size_t>(i)] = i;

    SignatureResult out;
    while (!active.empty()) {
        int pivot = -1;
        for (int idx : active) {
            if (sign_of(g(idx, idx)) != 0) {
                pivot = idx;
                break;
            }
        }
        if (pivot < 0) {
            // every remaining diagonal entry is zero
            int a = -1, b = -1;
            for (size_t x = 0; x < active.size() && a < 0; ++x) {
                for (size_t y = x + 1; y < active.size(); ++y) {
                    if (sign_of(g(active[x], active[y])) != 0) {
                        a = active[x];
                        b = active[y];
                        break;
                    }
                }
            }
            if (a < 0) {
                out.degenerate = true;  // remaining block is the radical
                return out;
            }
            // v_a += v_b turns the zero diagonal entry into 2*G(a,b)
            Rat twice = Rat(2) * g(a, b);
            for (int k : active) {
                if (k == a) continue;
                g(a, k) += g(b, k);
                g(k, a) = g(a, k);
            }
            g(a, a) = twice;
            continue;
        }
        out.signature += sign_of(g(pivot, pivot));
        out.rank += 1;
        Rat d = g(pivot, pivot);
        std::vector<int> rest;
        rest.reserve(active.size());
        for (int idx : active) {
            if (idx != pivot) rest.push_back(idx);
        }
        for (int i : rest) {
            if (sign_of(g(i, pivot)) == 0) continue;
            Rat f = g(i, pivot) / d;
            for (int j : rest) {
                g(i, j) -= f * g(pivot, j);
            }
        }
        for (int i : rest) {
            g(i, pivot) = Rat(0);
            g(pivot, i) = Rat(0);
        }
        active = std::move(rest);
    }
    return out;
}

RatPoly char_poly_int_as_rat(const IntMat& m) {
    Poly<Int> p = char_poly<Int>(m);
    return to_rat_poly(p);
}

}  // namespace vr
