#pragma once

// Combinatorial layer for the pair (r,s): the sign sequence of the
// quantum integers, factorial signs, admissible color triples and the
// sign of the triple symbol, the knot signature, and the modular
// inverse parameter.

#include <stdexcept>
#include <vector>

namespace vr {

struct Params {
    int r = 0;
    int s = 0;

    Params(int r_, int s_);
};

bool valid_params(int r, int s);

// eps[n] for n = 1..r-1 is the sign of the quantum integer [n] at
// q = exp(i*pi*s/r); indices 0 and r evaluate to 0 by convention.
class SignSeq {
  public:
    explicit SignSeq(Params p);

    const Params& params() const { return p_; }

    // 0 for n == 0 or n == r; throws outside [0, r]
    int eps(int n) const;

    // sign of [n]! = prod_{k=1..n} eps_k; +1 for n == 0
    int factorial_sign(int n) const;

    const std::vector<int>& raw() const { return eps_; }  // eps_1..eps_{r-1}

  private:
    Params p_;
    std::vector<int> eps_;       // eps_[n-1] = eps_n
    std::vector<int> fact_;      // fact_[n] = sign of [n]!
};

bool is_admissible(int i, int j, int k, int r);

// Sign of the triple symbol <i,j,k>: 0 when not admissible, otherwise
// the product of (-1)^(a+b+c) with the factorial signs of the symbol
// (every factor is +-1, so the quotient becomes a product).
int triple_sign(const SignSeq& seq, int i, int j, int k);

// Sum of the eps_n; equals the standard signature of the knot K(r,s).
int knot_signature(const SignSeq& seq);

struct InverseParam {
    int r = 0;
    int s_star = 0;   // the unique inverse of s in (0, r)
    bool odd = false; // whether s_star is itself a valid odd parameter
};

InverseParam s_star(const Params& p);

}  // namespace vr
