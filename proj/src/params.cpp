#include "vr/params.hpp"

#include <numeric>

namespace vr {

bool valid_params(int r, int s) {
    return r >= 3 && r % 2 == 1 && s % 2 == 1 && 0 < s && s < r && std::gcd(r, s) == 1;
}

Params::Params(int r_, int s_) : r(r_), s(s_) {
    if (!valid_params(r_, s_)) {
        throw std::invalid_argument("invalid parameters: need coprime odd 0 < s < r, r >= 3");
    }
}

SignSeq::SignSeq(Params p) : p_(p) {
    eps_.reserve(static_cast<size_t>(p.r) - 1);
    for (int n = 1; n < p.r; ++n) {
        long q = (static_cast<long>(n) * p.s) / p.r;
        eps_.push_back(q % 2 == 0 ? 1 : -1);
    }
    fact_.resize(static_cast<size_t>(p.r));
    fact_[0] = 1;
    for (int n = 1; n < p.r; ++n) fact_[static_cast<size_t>(n)] = fact_[static_cast<size_t>(n) - 1] * eps_[static_cast<size_t>(n) - 1];
    // structural sanity: eps_1 = 1, eps_n = eps_{r-n}, total product 1
    if (eps_[0] != 1) throw std::logic_error("sign sequence must start at +1");
    for (int n = 1; n < p.r; ++n) {
        if (eps(n) != eps(p.r - n)) throw std::logic_error("sign sequence not symmetric");
    }
    if (fact_[static_cast<size_t>(p.r) - 1] != 1) throw std::logic_error("sign sequence product must be +1");
}

int SignSeq::eps(int n) const {
    if (n < 0 || n > p_.r) throw std::out_of_range("sign index out of range");
    if (n == 0 || n == p_.r) return 0;
    return eps_[static_cast<size_t>(n) - 1];
}

int SignSeq::factorial_sign(int n) const {
    if (n < 0 || n >= p_.r) throw std::out_of_range("factorial sign index out of range");
    return fact_[static_cast<size_t>(n)];
}

bool is_admissible(int i, int j, int k, int r) {
    if (i < 0 || j < 0 || k < 0 || i > r - 2 || j > r - 2 || k > r - 2) {
        throw std::out_of_range("color out of range");
    }
    if ((i + j + k) % 2 != 0) return false;
    if (i > j + k || j > i + k || k > i + j) return false;
    return i + j + k <= 2 * r - 4;
}

int triple_sign(const SignSeq& seq, int i, int j, int k) {
    const int r = seq.params().r;
    if (!is_admissible(i, j, k, r)) return 0;
    const int a = (j + k - i) / 2;
    const int b = (i + k - j) / 2;
    const int c = (i + j - k) / 2;
    int s = ((a + b + c) % 2 == 0) ? 1 : -1;
    s *= seq.factorial_sign(a + b + c + 1);
    s *= seq.factorial_sign(a) * seq.factorial_sign(b) * seq.factorial_sign(c);
    s *= seq.factorial_sign(a + b) * seq.factorial_sign(a + c) * seq.factorial_sign(b + c);
    return s;
}

int knot_signature(const SignSeq& seq) {
    int sum = 0;
    for (int v : seq.raw()) sum += v;
    return sum;
}

InverseParam s_star(const Params& p) {
    int inv = 0;
    for (int t = 1; t < p.r; ++t) {
        if ((static_cast<long>(t) * p.s) % p.r == 1) {
            inv = t;
            break;
        }
    }
    InverseParam out;
    out.r = p.r;
    out.s_star = inv;
    out.odd = (inv % 2 == 1);
    return out;
}

}  // namespace vr
