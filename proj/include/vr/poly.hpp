#pragma once

// Dense univariate polynomials over an exact scalar (Rat, Int, or any
// type with ring operators). Coefficients are stored ascending by
// degree; the zero polynomial is the empty vector. Free functions keep
// the call sites expression-friendly.

#include "vr/arith.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vr {

template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.push_back(T(v));
        normalize();
    }

    static Poly constant(const T& v) {
        Poly p;
        if (!(v == T(0))) p.c_.push_back(v);
        return p;
    }

    static Poly monomial(const T& v, int deg) {
        Poly p;
        if (!(v == T(0))) {
            p.c_.assign(static_cast<size_t>(deg) + 1, T(0));
            p.c_.back() = v;
        }
        return p;
    }

    static Poly identity() { return monomial(T(1), 1); }  // the variable X

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const T& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    // Coefficient of X^i; zero beyond the stored range.
    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<T>& coeffs() const { return c_; }

    void set_coeff(int i, const T& v) {
        if (i < 0) throw std::out_of_range("negative degree");
        if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(i) + 1, T(0));
        c_[static_cast<size_t>(i)] = v;
        normalize();
    }

    T operator()(const T& x) const {
        T acc(0);
        for (size_t i = c_.size(); i-- > 0;) {
            acc = T(acc * x + c_[i]);
        }
        return acc;
    }

    Poly operator-() const {
        Poly r(*this);
        for (T& v : r.c_) v = T(-v);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = T(c_[i] + o.c_[i]);
        normalize();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = T(c_[i] - o.c_[i]);
        normalize();
        return *this;
    }

    Poly& operator*=(const T& s) {
        if (s == T(0)) {
            c_.clear();
            return *this;
        }
        for (T& v : c_) v = T(v * s);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T(0)) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] = T(r[i + j] + a.c_[i] * b.c_[j]);
            }
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using RatPoly = Poly<Rat>;
using IntPoly = Poly<Int>;

template <class T>
Poly<T> derivative(const Poly<T>& f) {
    if (f.degree() <= 0) return Poly<T>();
    std::vector<T> r(static_cast<size_t>(f.degree()), T(0));
    for (int i = 1; i <= f.degree(); ++i) {
        r[static_cast<size_t>(i) - 1] = T(f.coeff(i) * T(i));
    }
    return Poly<T>(std::move(r));
}

// Quotient and remainder; requires the leading coefficient of b to be
// invertible in T (always true over a field).
template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly<T> q;
    Poly<T> r = a;
    const T& blc = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        T coef = T(r.leading() / blc);
        Poly<T> term = Poly<T>::monomial(coef, d);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
    return divrem(a, b).first;
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
    return divrem(a, b).second;
}

template <class T>
Poly<T> compose(const Poly<T>& f, const Poly<T>& g) {
    Poly<T> acc;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * g + Poly<T>::constant(f.coeff(i));
    }
    return acc;
}

// X -> c*X
template <class T>
Poly<T> scale_arg(const Poly<T>& f, const T& c) {
    std::vector<T> r;
    r.reserve(static_cast<size_t>(f.degree() + 1));
    T p(1);
    for (int i = 0; i <= f.degree(); ++i) {
        r.push_back(T(f.coeff(i) * p));
        p = T(p * c);
    }
    return Poly<T>(std::move(r));
}

// X -> -X
template <class T>
Poly<T> flip_arg(const Poly<T>& f) {
    return scale_arg(f, T(-1));
}

template <class T>
Poly<T> monic(const Poly<T>& f) {
    if (f.is_zero()) return f;
    Poly<T> r = f;
    T inv = T(T(1) / f.leading());
    r *= inv;
    return r;
}

// ---- integer-polynomial specifics ----

// Positive gcd of all coefficients (0 for the zero polynomial).
inline Int content(const IntPoly& f) {
    Int g(0);
    for (const Int& v : f.coeffs()) g = gcd_int(g, v);
    return g;
}

// Content removed; sign normalized so that the leading coefficient is
// positive.
inline IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Int g = content(f);
    if (sign_of(f.leading()) < 0) g = -g;
    std::vector<Int> r;
    r.reserve(f.coeffs().size());
    for (const Int& v : f.coeffs()) r.push_back(v / g);
    return IntPoly(std::move(r));
}

// Exact division over Z; throws if not exact.
inline IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    IntPoly q;
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Int qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.leading().get_mpz_t(),
                    b.leading().get_mpz_t());
        if (sign_of(rem) != 0) throw std::domain_error("inexact polynomial division");
        IntPoly term = IntPoly::monomial(qc, r.degree() - b.degree());
        q += term;
        r -= term * b;
    }
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

inline bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Int qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.leading().get_mpz_t(),
                    b.leading().get_mpz_t());
        if (sign_of(rem) != 0) return false;
        IntPoly term = IntPoly::monomial(qc, r.degree() - b.degree());
        r -= term * b;
    }
    return r.is_zero();
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r over Z.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
    IntPoly r = a;
    const Int& blc = b.leading();
    int e = a.degree() - b.degree() + 1;
    if (e <= 0) return r;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly term = IntPoly::monomial(r.leading(), r.degree() - b.degree());
        r = r * blc - term * b;
        --e;
    }
    if (e > 0 && !r.is_zero()) r = r * pow_int(blc, static_cast<unsigned long>(e));
    return r;
}

// ---- conversions ----

// f = returned integer polynomial / denominator
inline std::pair<IntPoly, Int> clear_denominators(const RatPoly& f) {
    Int den(1);
    for (const Rat& v : f.coeffs()) den = lcm_int(den, v.get_den());
    std::vector<Int> r;
    r.reserve(f.coeffs().size());
    for (const Rat& v : f.coeffs()) {
        Rat scaled = v * Rat(den);
        r.emplace_back(scaled.get_num());
    }
    return {IntPoly(std::move(r)), den};
}

inline RatPoly to_rat_poly(const IntPoly& f) {
    std::vector<Rat> r;
    r.reserve(f.coeffs().size());
    for (const Int& v : f.coeffs()) r.emplace_back(v);
    return RatPoly(std::move(r));
}

inline bool has_integer_coeffs(const RatPoly& f) {
    for (const Rat& v : f.coeffs()) {
        if (!is_integer(v)) return false;
    }
    return true;
}

inline IntPoly to_int_poly(const RatPoly& f) {
    if (!has_integer_coeffs(f)) throw std::domain_error("polynomial has non-integer coefficients");
    std::vector<Int> r;
    r.reserve(f.coeffs().size());
    for (const Rat& v : f.coeffs()) r.emplace_back(v.get_num());
    return IntPoly(std::move(r));
}

// ---- gcd over Q (primitive PRS over Z inside), monic result ----

inline RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    IntPoly A = primitive_part(clear_denominators(a).first);
    IntPoly B = primitive_part(clear_denominators(b).first);
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        IntPoly R = primitive_part(pseudo_rem(A, B));
        A = B;
        B = R;
    }
    return monic(to_rat_poly(A));
}

// ---- resultant / discriminant ----

// Fraction-free determinant; destroys its argument.
inline Int det_bareiss(IntMat m) {
    const int n = static_cast<int>(m.rows());
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (sign_of(m(k, k)) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i) {
                if (sign_of(m(i, k)) != 0) {
                    piv = i;
                    break;
                }
            }
            if (piv < 0) return Int(0);
            m.row(k).swap(m.row(piv));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    Int d = m(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

inline Int resultant_int(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return Int(0);
    const int m = f.degree(), n = g.degree();
    if (m == 0) return pow_int(f.leading(), static_cast<unsigned long>(n));
    if (n == 0) return pow_int(g.leading(), static_cast<unsigned long>(m));
    IntMat s = IntMat::Zero(m + n, m + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= m; ++j) s(i, i + j) = f.coeff(m - j);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= n; ++j) s(n + i, i + j) = g.coeff(n - j);
    }
    return det_bareiss(std::move(s));
}

inline Rat resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    auto [F, df] = clear_denominators(f);
    auto [G, dg] = clear_denominators(g);
    Rat r(resultant_int(F, G));
    Rat scale = pow_rat(Rat(1, df), static_cast<unsigned long>(g.degree())) *
                pow_rat(Rat(1, dg), static_cast<unsigned long>(f.degree()));
    Rat out = r * scale;
    out.canonicalize();
    return out;
}

// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f); disc of a linear
// polynomial is 1 under this normalization.
inline Rat discriminant(const RatPoly& f) {
    const int n = f.degree();
    if (n < 1) throw std::domain_error("discriminant requires degree >= 1");
    Rat r = resultant(f, derivative(f));
    if (n == 1) return Rat(1);
    Rat d = r / f.leading();
    if (((static_cast<long>(n) * (n - 1)) / 2) % 2 != 0) d = -d;
    d.canonicalize();
    return d;
}

inline bool is_squarefree(const RatPoly& f) {
    if (f.degree() < 1) throw std::domain_error("squarefreeness requires degree >= 1");
    return poly_gcd(f, derivative(f)).degree() == 0;
}

inline RatPoly squarefree_part(const RatPoly& f) {
    if (f.degree() < 1) return monic(f);
    RatPoly g = poly_gcd(f, derivative(f));
    return monic(divrem(f, g).first);
}

// Yun decomposition: list of (monic squarefree factor, multiplicity),
// multiplicities ascending; product of factor^mult is f up to leading
// coefficient.
inline std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f) {
    std::vector<std::pair<RatPoly, int>> out;
    if (f.degree() < 1) return out;
    RatPoly p = monic(f);
    RatPoly dp = derivative(p);
    RatPoly g = poly_gcd(p, dp);
    RatPoly c = divrem(p, g).first;
    RatPoly d = divrem(dp, g).first - derivative(c);
    int mult = 1;
    while (c.degree() > 0) {
        RatPoly a = poly_gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, mult);
        c = divrem(c, a).first;
        d = divrem(d, a).first - derivative(c);
        ++mult;
    }
    return out;
}

// ---- printing ----

template <class T>
std::string to_string(const Poly<T>& f, const std::string& var = "t") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        T c = f.coeff(i);
        if (c == T(0)) continue;
        bool neg = false;
        std::ostringstream cs;
        cs << c;
        std::string cstr = cs.str();
        if (!cstr.empty() && cstr[0] == '-') {
            neg = true;
            cstr = cstr.substr(1);
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << cstr;
        } else {
            if (cstr != "1") os << cstr << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace vr
