#pragma once

// Small exact linear algebra on Eigen matrices with Int/Rat scalars:
// division-free characteristic polynomials (Berkowitz), traces, and an
// exact symmetric-form signature. Heavier decompositions go through
// Eigen's FullPivLU, which is exact over Rat.

#include "vr/poly.hpp"

namespace vr {

// det(t*I - m), monic; division-free, works over Int and Rat alike.
template <class S>
Poly<S> char_poly(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
    using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
    if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const int n = static_cast<int>(m.rows());
    std::vector<S> p{S(1)};  // descending coefficients, leading first
    for (int r = 1; r <= n; ++r) {
        std::vector<S> q(static_cast<size_t>(r) + 1, S(0));
        q[0] = S(1);
        q[1] = S(-m(r - 1, r - 1));
        if (r > 1) {
            Mat top = m.topLeftCorner(r - 1, r - 1);
            Vec col = m.block(0, r - 1, r - 1, 1);
            Eigen::Matrix<S, 1, Eigen::Dynamic> row = m.block(r - 1, 0, 1, r - 1);
            Vec v = col;
            for (int k = 2; k <= r; ++k) {
                S dot(0);
                for (int i = 0; i < r - 1; ++i) dot = S(dot + row(0, i) * v(i));
                q[static_cast<size_t>(k)] = S(-dot);
                if (k < r) v = top * v;
            }
        }
        std::vector<S> next(static_cast<size_t>(r) + 1, S(0));
        for (size_t i = 0; i < next.size(); ++i) {
            for (size_t j = 0; j < p.size() && j <= i; ++j) {
                next[i] = S(next[i] + q[i - j] * p[j]);
            }
        }
        p = std::move(next);
    }
    std::vector<S> ascending(static_cast<size_t>(n) + 1, S(0));
    for (int i = 0; i <= n; ++i) ascending[static_cast<size_t>(n - i)] = p[static_cast<size_t>(i)];
    return Poly<S>(std::move(ascending));
}

template <class S>
S trace_of(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
    S t(0);
    for (int i = 0; i < m.rows(); ++i) t = S(t + m(i, i));
    return t;
}

struct SignatureResult {
    int signature = 0;   // positive minus negative inertia
    int rank = 0;
    bool degenerate = false;
};

// Exact signature of a symmetric rational matrix by congruence
// reduction. When every remaining diagonal entry vanishes but some
// off-diagonal entry does not, the basis change v_i += v_j restores a
// usable pivot (the hyperbolic plane then contributes +1 and -1).
SignatureResult signature_of_symmetric(RatMat g);

RatPoly char_poly_int_as_rat(const IntMat& m);

}  // namespace vr
